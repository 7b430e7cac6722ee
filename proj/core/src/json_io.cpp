#include "torsionlab/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& what) {
  if (!j.is_object())
    fail(ErrorKind::MalformedSpec, what + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorKind::MalformedSpec, what + " is missing \"" + key + "\"");
  return *it;
}

int int_field(const Json& j, const std::string& key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer())
    fail(ErrorKind::MalformedSpec, what + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

int index_field(const Json& j, const std::string& key, int bound,
                const std::string& what) {
  int v = int_field(j, key, what);
  if (v < 0 || v >= bound)
    fail(ErrorKind::MalformedSpec, what + ": \"" + key + "\" = " +
                                       std::to_string(v) + " out of range [0," +
                                       std::to_string(bound) + ")");
  return v;
}

// rows x cols table of indices into [0, bound)
std::vector<std::vector<int>> table_field(const Json& j, const std::string& key,
                                          int rows, int cols, int bound,
                                          const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_array() || (int)v.size() != rows)
    fail(ErrorKind::MalformedSpec, what + ": \"" + key + "\" must be an array of " +
                                       std::to_string(rows) + " rows");
  std::vector<std::vector<int>> out(rows);
  for (int i = 0; i < rows; ++i) {
    const Json& row = v[i];
    if (!row.is_array() || (int)row.size() != cols)
      fail(ErrorKind::MalformedSpec,
           what + ": \"" + key + "\" row " + std::to_string(i) + " has " +
               std::to_string(row.is_array() ? row.size() : 0) +
               " entries, want " + std::to_string(cols));
    out[i].resize(cols);
    for (int k = 0; k < cols; ++k) {
      if (!row[k].is_number_integer())
        fail(ErrorKind::MalformedSpec, what + ": \"" + key + "\"[" +
                                           std::to_string(i) + "][" +
                                           std::to_string(k) + "] is not an integer");
      int e = row[k].get<int>();
      if (e < 0 || e >= bound)
        fail(ErrorKind::MalformedSpec,
             what + ": \"" + key + "\"[" + std::to_string(i) + "][" +
                 std::to_string(k) + "] = " + std::to_string(e) +
                 " out of range [0," + std::to_string(bound) + ")");
      out[i][k] = e;
    }
  }
  return out;
}

std::vector<int> index_row(const Json& v, int bound, const std::string& what) {
  if (!v.is_array())
    fail(ErrorKind::MalformedSpec, what + " must be an array");
  std::vector<int> out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number_integer())
      fail(ErrorKind::MalformedSpec,
           what + "[" + std::to_string(k) + "] is not an integer");
    int e = v[k].get<int>();
    if (e < 0 || e >= bound)
      fail(ErrorKind::MalformedSpec,
           what + "[" + std::to_string(k) + "] = " + std::to_string(e) +
               " out of range [0," + std::to_string(bound) + ")");
    out.push_back(e);
  }
  return out;
}

std::vector<int> derive_neg(const std::vector<std::vector<int>>& add, int size,
                            int zero, const std::string& what) {
  std::vector<int> neg(size, -1);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y)
      if (add[x][y] == zero) {
        neg[x] = y;
        break;
      }
    if (neg[x] < 0)
      fail(ErrorKind::AxiomViolation,
           what + ": element " + std::to_string(x) + " has no additive inverse");
  }
  return neg;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::MalformedSpec, what + ": " + e.what());
  }
}

std::string subset_str(const Subset& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

Json optional_string(const std::optional<std::string>& s) {
  return s ? Json(*s) : Json(nullptr);
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::MalformedSpec, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_text(text, path);
}

RingPtr ring_from_json(const Json& j) {
  const std::string what = "ring spec";
  FiniteRing R;
  R.name = j.is_object() && j.contains("name") && j["name"].is_string()
               ? j["name"].get<std::string>()
               : "ring";
  int n = int_field(j, "size", what);
  if (n <= 0) fail(ErrorKind::MalformedSpec, what + ": \"size\" must be positive");
  R.n = n;
  if (j.contains("elements")) {
    const Json& els = j["elements"];
    if (!els.is_array() || (int)els.size() != n)
      fail(ErrorKind::MalformedSpec,
           what + ": \"elements\" must list " + std::to_string(n) + " names");
    for (const Json& e : els) {
      if (!e.is_string())
        fail(ErrorKind::MalformedSpec, what + ": element names must be strings");
      R.elements.push_back(e.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) R.elements.push_back(std::to_string(i));
  }
  R.add = table_field(j, "add", n, n, n, what);
  R.mul = table_field(j, "mul", n, n, n, what);
  R.zero = index_field(j, "zero", n, what);
  R.one = index_field(j, "one", n, what);
  R.neg = derive_neg(R.add, n, R.zero, what);
  return ring_from_tables(std::move(R));
}

RingPtr load_ring(const std::string& path) {
  return ring_from_json(load_json_file(path));
}

FiniteModule module_from_json(const Json& j, const RingPtr& R) {
  const std::string what = "module spec";
  FiniteModule M;
  M.name = j.is_object() && j.contains("name") && j["name"].is_string()
               ? j["name"].get<std::string>()
               : "module";
  int m = int_field(j, "size", what);
  if (m <= 0) fail(ErrorKind::MalformedSpec, what + ": \"size\" must be positive");
  M.size = m;
  M.add = table_field(j, "add", m, m, m, what);
  M.zero = index_field(j, "zero", m, what);
  M.neg = derive_neg(M.add, m, M.zero, what);
  if (j.contains("act_right")) {
    M.ring = R;
    M.act_right = table_field(j, "act_right", m, R->n, m, what);
  }
  if (j.contains("act_left")) {
    M.left_ring = R;
    M.act_left = table_field(j, "act_left", R->n, m, m, what);
  }
  validate_module(M);
  return M;
}

FiniteModule load_module(const std::string& path, const RingPtr& R) {
  return module_from_json(load_json_file(path), R);
}

Derivation derivation_from_json(const Json& j, int expected_size) {
  const Json* tab = &j;
  if (j.is_object()) tab = &field(j, "table", "derivation spec");
  std::vector<int> t = index_row(*tab, expected_size, "derivation table");
  if ((int)t.size() != expected_size)
    fail(ErrorKind::MalformedSpec,
         "derivation table has " + std::to_string(t.size()) + " entries, want " +
             std::to_string(expected_size));
  Derivation d;
  d.table = std::move(t);
  return d;
}

Derivation load_derivation(const std::string& path, int expected_size) {
  return derivation_from_json(load_json_file(path), expected_size);
}

Side side_from_string(const std::string& s) {
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  if (s == "two_sided" || s == "two-sided") return Side::TwoSided;
  fail(ErrorKind::MalformedSpec, "unknown side: " + s);
}

std::string side_to_string(Side s) {
  switch (s) {
    case Side::Right: return "right";
    case Side::Left: return "left";
    default: return "two_sided";
  }
}

GabrielFilter filter_from_json(const RingPtr& R, Side side, const Json& j) {
  if (j.is_string()) return named_filter(R, side, j.get<std::string>());
  if (!j.is_object())
    fail(ErrorKind::MalformedSpec, "filter spec must be a name or an object");
  if (j.contains("named")) {
    const Json& n = j["named"];
    if (!n.is_string())
      fail(ErrorKind::MalformedSpec, "filter spec: \"named\" must be a string");
    return named_filter(R, side, n.get<std::string>());
  }
  if (j.contains("side")) {
    const Json& s = j["side"];
    if (!s.is_string())
      fail(ErrorKind::MalformedSpec, "filter spec: \"side\" must be a string");
    Side declared = side_from_string(s.get<std::string>());
    if (declared != side)
      fail(ErrorKind::MalformedSpec,
           "filter spec is declared " + side_to_string(declared) +
               " but the operation runs on the " + side_to_string(side) + " side");
  }
  const Json& ideals = field(j, "ideals", "filter spec");
  if (!ideals.is_array() || ideals.empty())
    fail(ErrorKind::MalformedSpec,
         "filter spec: \"ideals\" must be a nonempty array of index arrays");
  std::vector<Subset> seeds;
  std::string label = "gen(";
  for (size_t i = 0; i < ideals.size(); ++i) {
    Subset s = index_row(ideals[i], R->n, "filter spec: \"ideals\"[" +
                                              std::to_string(i) + "]");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (i) label += ",";
    label += subset_str(s);
    seeds.push_back(std::move(s));
  }
  label += ")";
  if (j.value("exact", false)) {
    for (Subset& s : seeds)
      if (!subset_contains(s, R->zero)) {
        s.push_back(R->zero);
        std::sort(s.begin(), s.end());
      }
    return make_filter(R, side, seeds, "exact" + label.substr(3));
  }
  return filter_closure(R, side, seeds, label);
}

GabrielFilter filter_from_spec(const RingPtr& R, Side side,
                               const std::string& spec) {
  std::string s = trimmed(spec);
  if (s.empty()) fail(ErrorKind::MalformedSpec, "empty filter spec");
  if (s[0] != '{' && s[0] != '[' && s[0] != '"')
    return named_filter(R, side, s);
  return filter_from_json(R, side, parse_text(s, "filter spec"));
}

SymmetricFilter symmetric_filter_from_json(const SymContextPtr& ctx,
                                           const Json& j) {
  if (j.is_string()) return named_symmetric_filter(ctx, j.get<std::string>());
  if (!j.is_object())
    fail(ErrorKind::MalformedSpec,
         "symmetric filter spec must be a name or an object");
  if (j.contains("named")) {
    const Json& n = j["named"];
    if (!n.is_string())
      fail(ErrorKind::MalformedSpec,
           "symmetric filter spec: \"named\" must be a string");
    return named_symmetric_filter(ctx, n.get<std::string>());
  }
  GabrielFilter left =
      filter_from_json(ctx->R, Side::Left, field(j, "left", "symmetric filter spec"));
  GabrielFilter right = filter_from_json(ctx->R, Side::Right,
                                         field(j, "right", "symmetric filter spec"));
  return induce_symmetric_filter(ctx, std::move(left), std::move(right));
}

SymmetricFilter symmetric_filter_from_spec(const SymContextPtr& ctx,
                                           const std::string& spec) {
  std::string s = trimmed(spec);
  if (s.empty()) fail(ErrorKind::MalformedSpec, "empty symmetric filter spec");
  if (s[0] != '{' && s[0] != '[' && s[0] != '"')
    return named_symmetric_filter(ctx, s);
  return symmetric_filter_from_json(ctx, parse_text(s, "symmetric filter spec"));
}

Json filter_to_json(const GabrielFilter& F) {
  Json j;
  j["label"] = F.label;
  j["side"] = side_to_string(F.side);
  j["min_ideal"] = F.min_ideal;
  j["member_count"] = (int)F.members.size();
  j["members"] = F.members;
  return j;
}

Json symmetric_filter_to_json(const SymmetricFilter& SF) {
  Json j;
  j["label"] = SF.label;
  j["left"] = SF.left.label;
  j["right"] = SF.right.label;
  j["enveloping_size"] = SF.ctx->T.ring->n;
  j["min_ideal_size"] = (int)SF.least.size();
  j["member_count"] = (int)SF.induced.members.size();
  return j;
}

Json quotient_report_json(const QuotientModule& QM,
                          const std::optional<std::string>& ring_iso_hint) {
  Json j;
  j["filter"] = QM.filter.label;
  j["min_ideal"] = QM.filter.min_ideal;
  j["carrier_size"] = QM.carrier.size;
  j["ring_iso_hint"] = optional_string(ring_iso_hint);
  j["q_kernel"] = QM.q_kernel;
  j["side"] = side_to_string(QM.filter.side);
  j["module"] = QM.base.name;
  j["q"] = QM.q;
  return j;
}

Json ring_quotient_report_json(const QuotientRing& QR) {
  Json j = quotient_report_json(QR.module, QR.iso_hint);
  j["module"] = "R";
  return j;
}

Json extension_report_json(const ExtensionResult& E) {
  Json j;
  j["method"] = E.method;
  j["unique"] = E.unique;
  j["commutes"] = E.commutes;
  j["table"] = E.extension.table;
  j["found"] = E.found;
  j["count"] = E.count;
  j["law_ok"] = E.law_ok;
  return j;
}

Json ring_extension_report_json(const RingExtensionResult& E) {
  Json j = extension_report_json(E.ext);
  j["leibniz"] = E.leibniz;
  return j;
}

Json agreement_report_json(const AgreementReport& A) {
  Json j;
  j["f1_differential"] = A.f1_differential;
  j["f2_differential"] = A.f2_differential;
  j["torsion1_preserved"] = A.torsion1_preserved;
  j["torsion2_preserved"] = A.torsion2_preserved;
  j["ext1_found"] = A.ext1_found;
  j["ext2_found"] = A.ext2_found;
  j["connecting_commutes"] = A.connecting_commutes;
  j["iterated_commutes"] = A.iterated_commutes;
  j["all_agree"] = A.all_agree;
  return j;
}

Json symmetric_quotient_report_json(const SymmetricQuotient& SQ) {
  Json j;
  j["filter"] = SQ.sf.label;
  j["min_ideal_size"] = (int)SQ.sf.least.size();
  j["carrier_size"] = SQ.carrier_bimodule.size;
  j["ring_iso_hint"] = Json(nullptr);
  j["q_kernel"] = SQ.over_T.q_kernel;
  j["module"] = SQ.bimodule.name;
  j["q"] = SQ.over_T.q;
  return j;
}

Json symmetric_ring_report_json(const SymmetricQuotientRing& SQR) {
  Json j = symmetric_quotient_report_json(SQR.module);
  j["ring_iso_hint"] = optional_string(SQR.iso_hint);
  j["module"] = "R";
  j["pair_count"] = SQR.pair_count;
  return j;
}

Json symmetric_extension_report_json(const SymmetricExtension& E) {
  Json j = extension_report_json(E.ext);
  j["two_sided_law"] = E.two_sided_law;
  return j;
}

Json symmetric_agreement_report_json(const SymmetricAgreementReport& A) {
  Json j;
  j["left_nested"] = A.left_nested;
  j["right_nested"] = A.right_nested;
  j["sf1_differential"] = A.sf1_differential;
  j["sf2_differential"] = A.sf2_differential;
  j["over_enveloping"] = agreement_report_json(A.over_T);
  return j;
}

Json analysis_json(const RingPtr& R) {
  Json j;
  j["ring"] = R->name;
  j["size"] = R->n;
  std::optional<std::string> hint = ring_iso_hint(*R);
  j["iso_hint"] = optional_string(hint);
  j["abelian_invariants"] = abelian_invariants(group_of(*R));
  Json ideals;
  ideals["right"] = enumerate_ideals(*R, Side::Right);
  ideals["left"] = enumerate_ideals(*R, Side::Left);
  ideals["two_sided"] = enumerate_ideals(*R, Side::TwoSided);
  j["ideals"] = ideals;
  std::vector<Derivation> derivs = enumerate_derivations(*R);
  Json dtab = Json::array();
  for (const Derivation& d : derivs) dtab.push_back(d.table);
  j["derivations"] = dtab;
  for (Side side : {Side::Right, Side::Left}) {
    Json filters = Json::array();
    for (const char* name : {"lambek", "goldie", "classical", "trivial", "improper"}) {
      GabrielFilter F = named_filter(R, side, name);
      Json row;
      row["name"] = name;
      row["min_ideal"] = F.min_ideal;
      row["member_count"] = (int)F.members.size();
      row["faithful"] = is_faithful(F);
      row["differential"] = is_differential(F, derivs).differential;
      filters.push_back(row);
    }
    j[side == Side::Right ? "filters_right" : "filters_left"] = filters;
  }
  return j;
}

Json census_json(const CensusReport& C) {
  Json j;
  Json derivs = Json::array();
  for (size_t i = 0; i < C.derivations.size(); ++i) {
    Json row;
    row["table"] = C.derivations[i].table;
    row["inner"] = (bool)C.derivation_inner[i];
    derivs.push_back(row);
  }
  j["derivations"] = derivs;
  Json rows = Json::array();
  for (const FilterCensusRow& r : C.rows) {
    Json row;
    row["label"] = r.label;
    row["side"] = side_to_string(r.side);
    row["min_ideal"] = r.min_ideal;
    row["member_count"] = r.member_count;
    row["faithful"] = r.faithful;
    row["differential"] = r.differential;
    row["perfect"] = r.perfect;
    row["carrier_size"] = r.carrier_size;
    row["iso_hint"] = optional_string(r.iso_hint);
    Json ext = Json::array();
    for (bool b : r.extends_derivation) ext.push_back(b);
    row["extends"] = ext;
    rows.push_back(row);
  }
  j["filters"] = rows;
  return j;
}

Json suite_report_json(const SuiteReport& S, bool timings) {
  Json j;
  j["suite"] = S.suite;
  j["anchor"] = S.anchor;
  j["instances"] = S.instances;
  j["pass"] = S.pass;
  j["fail"] = S.fail;
  j["witnesses"] = S.witnesses;
  j["notes"] = S.notes;
  if (timings) j["wall_ms"] = S.wall_ms;
  return j;
}

}  // namespace torsionlab

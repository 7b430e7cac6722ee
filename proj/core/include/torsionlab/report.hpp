#pragma once

#include "torsionlab/symmetric.hpp"

namespace torsionlab {

// One verification suite = one property statement (the anchor) checked over
// every applicable corpus instance. Failures carry replayable witnesses.
struct SuiteReport {
  std::string suite;
  std::string anchor;
  int instances = 0;
  int pass = 0;
  int fail = 0;
  std::vector<std::string> witnesses;  // capped, failures only
  std::vector<std::string> notes;      // disclosures (degenerate cases etc.)
  long long wall_ms = -1;
};

struct RunOptions {
  int max_ideals = 16;
  bool timings = false;
  int witness_cap = 8;
};

// id -> anchor, in execution order; the single place anchors are defined
const std::vector<std::pair<std::string, std::string>>& suite_anchors();
std::vector<std::string> suite_names();

SuiteReport run_suite(const RingPtr& R, const std::string& name,
                      const RunOptions& opt = {});
// all suites, or the named subset, in table order
std::vector<SuiteReport> run_verify(const RingPtr& R, const RunOptions& opt = {},
                                    const std::vector<std::string>& only = {});

// generated module corpus: the ring itself and its cyclic quotients
std::vector<FiniteModule> corpus_modules(const RingPtr& R, Side side);
std::vector<FiniteModule> corpus_bimodules(const RingPtr& R);

// census rows: every enumerated filter crossed with every ring derivation
struct FilterCensusRow {
  std::string label;
  Side side = Side::Right;
  Subset min_ideal;
  int member_count = 0;
  bool faithful = false;
  bool differential = false;
  bool perfect = false;
  int carrier_size = 0;
  std::optional<std::string> iso_hint;
  std::vector<bool> extends_derivation;  // indexed like the derivation list
};
struct CensusReport {
  std::vector<Derivation> derivations;
  std::vector<bool> derivation_inner;
  std::vector<FilterCensusRow> rows;  // right side then left side
};
CensusReport run_census(const RingPtr& R, const RunOptions& opt = {});

}  // namespace torsionlab

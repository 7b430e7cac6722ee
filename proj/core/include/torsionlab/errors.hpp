#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

// Every failure carries a kind so callers (CLI, suites) can map it to an exit
// code or a report row without string matching.
enum class ErrorKind {
  AxiomViolation,        // ring/module/filter law broken, witness in message
  MalformedSpec,         // unparseable or internally inconsistent input
  MissingAction,         // operation needs an action the module does not carry
  IncompatibleActions,   // left/right structures disagree
  NotAnIdeal,            // subset fails closure for the requested side
  TooManyIdeals,         // enumeration exceeds the configured bound
  NotNested,             // filter pair lacks the required inclusion
  CriteriaDisagree,      // two supposedly equivalent tests returned different verdicts
  InternalInconsistency, // a structural guarantee failed at runtime; a bug, not bad input
  TorsionNotPreserved,   // map does not descend to the torsion quotient
  NoExtension,           // no map satisfies the extension constraints
  FormulaInapplicable,   // closed-form extension preconditions not met
  SearchSpaceTooLarge,   // exhaustive search refused by bound
  ExtensionMissing,      // agreement check lacks a required extension
  EquivalenceBroken,     // claimed equivalence of conditions failed on a witness
  IllDefined,            // construction depends on a choice it must not depend on
  LawViolation,          // derivation/action law fails on a witness
  NotOre,                // multiplicative set fails the Ore condition
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Internal guarantees: prefer this over assert so release builds keep the
// checks; the whole artifact is a verifier and must not silently continue.
inline void ensure(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace torsionlab

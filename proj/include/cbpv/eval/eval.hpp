#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cbpv/core/check.hpp"
#include "cbpv/core/terms.hpp"

namespace cbpv::eval {

// Result of exhaustively exploring the big-step derivations of a closed
// computation. When exhausted is false, terminals is the complete set of
// results; otherwise some derivation branch ran out of fuel.
struct EvalOutcome {
  std::vector<CompPtr> terminals;  // deduplicated, insertion order
  bool exhausted = false;
};

struct IllTyped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fuel bounds the height of each derivation: every inference-rule
// application along a branch costs one unit.
EvalOutcome eval(const CompPtr& m, std::int64_t fuel);

struct Results {
  std::vector<ValuePtr> values;
  bool exhausted = false;
  bool contains(const ValuePtr& v) const;
};

// Projects the Return terminals of a computation of returner type.
Results results(const CompPtr& m, std::int64_t fuel);

// Same, but typechecks first under the given signature.
Results results_checked(const CompPtr& m, std::int64_t fuel,
                        EffectSignature sig);

enum class ProgramRelation { ResultEq, ResultImpl };
enum class Verdict { Pass, Fail, Inconclusive };

struct RelateReport {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ValuePtr> witness;  // for ResultImpl failures
  Results left, right;
};

// Evaluates a program relation on two closed programs of type F bool.
//   ResultEq:   some V with M -> return V and M' -> return V
//   ResultImpl: every V with M -> return V also has M' -> return V
// Inconclusive when fuel exhaustion leaves the relation undetermined.
RelateReport relate_programs(const CompPtr& m, const CompPtr& m2,
                             ProgramRelation rel, std::int64_t fuel,
                             EffectSignature sig);

}  // namespace cbpv::eval

#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace cbpv {

struct ValueType;
struct CompType;
using ValueTypePtr = std::shared_ptr<const ValueType>;
using CompTypePtr = std::shared_ptr<const CompType>;

// Value types: unit | A1 * A2 | bool | U C
struct ValueType {
  enum class Kind { Unit, Prod, Bool, Thunk };
  Kind kind;
  ValueTypePtr fst, snd;  // Prod
  CompTypePtr comp;       // Thunk
};

// Computation types: C1 & C2 | A -> C | F A
struct CompType {
  enum class Kind { CompProd, Arrow, Free };
  Kind kind;
  CompTypePtr cfst, csnd;  // CompProd
  ValueTypePtr arg;        // Arrow argument / Free payload
  CompTypePtr body;        // Arrow result
};

ValueTypePtr vt_unit();
ValueTypePtr vt_bool();
ValueTypePtr vt_prod(ValueTypePtr a, ValueTypePtr b);
ValueTypePtr vt_thunk(CompTypePtr c);
CompTypePtr ct_cprod(CompTypePtr c, CompTypePtr d);
CompTypePtr ct_arrow(ValueTypePtr a, CompTypePtr c);
CompTypePtr ct_free(ValueTypePtr a);

bool equal(const ValueTypePtr& a, const ValueTypePtr& b);
bool equal(const CompTypePtr& a, const CompTypePtr& b);

std::string show(const ValueTypePtr& a);
std::string show(const CompTypePtr& c);

// Which effect constructs a term may use. Pure forbids rec/fail/or,
// Div permits rec only, Nondet permits fail/or only.
enum class EffectSignature { Pure, Div, Nondet };

inline bool allows_rec(EffectSignature s) { return s == EffectSignature::Div; }
inline bool allows_nondet(EffectSignature s) {
  return s == EffectSignature::Nondet;
}

}  // namespace cbpv

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "cbpv/core/types.hpp"

namespace cbpv {

struct ValueTerm;
struct CompTerm;
using ValuePtr = std::shared_ptr<const ValueTerm>;
using CompPtr = std::shared_ptr<const CompTerm>;

// Values: x | unit | (V1, V2) | true | false | thunk M
struct ValueTerm {
  enum class Kind { Var, Unit, Pair, True, False, Thunk };
  Kind kind;
  std::string var;    // Var
  ValuePtr fst, snd;  // Pair
  CompPtr comp;       // Thunk
};

// Computations. Binders: Lam(var), To(var in m2), MatchPair(var, var2),
// Rec(var, bound at type U ctype).
struct CompTerm {
  enum class Kind {
    CompPair,
    Proj,
    Lam,
    Push,
    Return,
    To,
    MatchPair,
    If,
    Force,
    Rec,
    Fail,
    Or
  };
  Kind kind;
  CompPtr m1, m2;         // subcomputations
  int index = 0;          // Proj: 1 or 2
  std::string var, var2;  // binders
  ValueTypePtr vtype;     // Lam annotation
  CompTypePtr ctype;      // Rec / Fail annotation
  ValuePtr val;           // Push argument, Return/MatchPair/If/Force value
};

ValuePtr v_var(std::string name);
ValuePtr v_unit();
ValuePtr v_pair(ValuePtr a, ValuePtr b);
ValuePtr v_true();
ValuePtr v_false();
ValuePtr v_thunk(CompPtr m);

CompPtr c_cpair(CompPtr a, CompPtr b);
CompPtr c_proj(int index, CompPtr m);
CompPtr c_lam(std::string x, ValueTypePtr a, CompPtr body);
CompPtr c_push(ValuePtr v, CompPtr m);
CompPtr c_return(ValuePtr v);
CompPtr c_to(CompPtr m, std::string x, CompPtr n);
CompPtr c_match(ValuePtr v, std::string x1, std::string x2, CompPtr m);
CompPtr c_if(ValuePtr v, CompPtr then_m, CompPtr else_m);
CompPtr c_force(ValuePtr v);
CompPtr c_rec(std::string x, CompTypePtr c, CompPtr body);
CompPtr c_fail(CompTypePtr c);
CompPtr c_or(CompPtr a, CompPtr b);

bool equal(const ValuePtr& a, const ValuePtr& b);
bool equal(const CompPtr& a, const CompPtr& b);

// A terminal computation has an introduction form outside: a computation
// pair, a lambda, or a return.
bool is_terminal(const CompPtr& m);

std::set<std::string> free_vars(const ValuePtr& v);
std::set<std::string> free_vars(const CompPtr& m);

using Subst = std::map<std::string, ValuePtr>;

// Capture-avoiding simultaneous substitution. Bound variables are renamed
// fresh when they collide with free variables of the substituted values.
ValuePtr substitute(const ValuePtr& v, const Subst& s);
CompPtr substitute(const CompPtr& m, const Subst& s);

// Deterministic fresh-name supply: strips any existing "#n" suffix from the
// base and appends the next counter value.
std::string fresh_name(const std::string& base);
void reset_fresh_counter();

std::string show(const ValuePtr& v);
std::string show(const CompPtr& m);

}  // namespace cbpv

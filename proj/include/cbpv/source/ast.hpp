#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cbpv/core/check.hpp"
#include "cbpv/core/terms.hpp"

namespace cbpv::src {

struct SrcType;
using SrcTypePtr = std::shared_ptr<const SrcType>;

// Source types: unit | t1 x t2 | bool | t -> t'
struct SrcType {
  enum class Kind { Unit, Prod, Bool, Arrow };
  Kind kind;
  SrcTypePtr fst, snd;  // Prod / Arrow(arg, result)
};

SrcTypePtr st_unit();
SrcTypePtr st_bool();
SrcTypePtr st_prod(SrcTypePtr a, SrcTypePtr b);
SrcTypePtr st_arrow(SrcTypePtr a, SrcTypePtr b);

bool equal(const SrcTypePtr& a, const SrcTypePtr& b);
std::string show(const SrcTypePtr& t);

struct SrcExpr;
using SrcExprPtr = std::shared_ptr<const SrcExpr>;

struct SrcExpr {
  enum class Kind {
    Var,
    Unit,
    Pair,
    Fst,
    Snd,
    True,
    False,
    If,
    Lam,
    App,
    RecFun,
    Fail,
    Or
  };
  Kind kind;
  std::string var, var2;    // Var name / binders (RecFun: var=f, var2=x)
  SrcTypePtr type, type2;   // annotations (Lam arg; RecFun arg+result; Fail)
  SrcExprPtr e1, e2, e3;    // subexpressions
};

SrcExprPtr s_var(std::string x);
SrcExprPtr s_unit();
SrcExprPtr s_pair(SrcExprPtr a, SrcExprPtr b);
SrcExprPtr s_fst(SrcExprPtr e);
SrcExprPtr s_snd(SrcExprPtr e);
SrcExprPtr s_true();
SrcExprPtr s_false();
SrcExprPtr s_if(SrcExprPtr c, SrcExprPtr t, SrcExprPtr f);
SrcExprPtr s_lam(std::string x, SrcTypePtr t, SrcExprPtr body);
SrcExprPtr s_app(SrcExprPtr f, SrcExprPtr a);
SrcExprPtr s_recfun(std::string f, SrcTypePtr arg, SrcTypePtr res,
                    std::string x, SrcExprPtr body);
SrcExprPtr s_fail(SrcTypePtr t);
SrcExprPtr s_or(SrcExprPtr a, SrcExprPtr b);

bool equal(const SrcExprPtr& a, const SrcExprPtr& b);
std::string show(const SrcExprPtr& e);
std::vector<std::string> free_vars(const SrcExprPtr& e);

// Ordered source typing context.
class SrcContext {
 public:
  SrcContext() = default;
  explicit SrcContext(std::vector<std::pair<std::string, SrcTypePtr>> entries);
  SrcContext extended(const std::string& name, SrcTypePtr type) const;
  const SrcTypePtr* lookup(const std::string& name) const;
  const std::vector<std::pair<std::string, SrcTypePtr>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, SrcTypePtr>> entries_;
};

// Simply-typed rules plus the effect extensions gated by sig.
SrcTypePtr check_src(const SrcContext& ctx, const SrcExprPtr& e,
                     EffectSignature sig);

}  // namespace cbpv::src

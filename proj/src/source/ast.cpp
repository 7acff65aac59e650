#include "cbpv/source/ast.hpp"

#include <algorithm>
#include <set>

namespace cbpv::src {

namespace {
using SK = SrcExpr::Kind;
using Code = TypeError::Code;

SrcTypePtr mkt(SrcType t) { return std::make_shared<const SrcType>(std::move(t)); }
SrcExprPtr mke(SrcExpr e) { return std::make_shared<const SrcExpr>(std::move(e)); }
}  // namespace

SrcTypePtr st_unit() {
  static const auto t = mkt(SrcType{SrcType::Kind::Unit});
  return t;
}
SrcTypePtr st_bool() {
  static const auto t = mkt(SrcType{SrcType::Kind::Bool});
  return t;
}
SrcTypePtr st_prod(SrcTypePtr a, SrcTypePtr b) {
  return mkt(SrcType{SrcType::Kind::Prod, std::move(a), std::move(b)});
}
SrcTypePtr st_arrow(SrcTypePtr a, SrcTypePtr b) {
  return mkt(SrcType{SrcType::Kind::Arrow, std::move(a), std::move(b)});
}

bool equal(const SrcTypePtr& a, const SrcTypePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case SrcType::Kind::Unit:
    case SrcType::Kind::Bool:
      return true;
    default:
      return equal(a->fst, b->fst) && equal(a->snd, b->snd);
  }
}

std::string show(const SrcTypePtr& t) {
  switch (t->kind) {
    case SrcType::Kind::Unit:
      return "sunit";
    case SrcType::Kind::Bool:
      return "sbool";
    case SrcType::Kind::Prod:
      return "(sprod " + show(t->fst) + " " + show(t->snd) + ")";
    case SrcType::Kind::Arrow:
      return "(sarrow " + show(t->fst) + " " + show(t->snd) + ")";
  }
  return "?";
}

SrcExprPtr s_var(std::string x) {
  SrcExpr e;
  e.kind = SK::Var;
  e.var = std::move(x);
  return mke(std::move(e));
}
SrcExprPtr s_unit() {
  static const auto e = mke(SrcExpr{SK::Unit});
  return e;
}
SrcExprPtr s_pair(SrcExprPtr a, SrcExprPtr b) {
  SrcExpr e;
  e.kind = SK::Pair;
  e.e1 = std::move(a);
  e.e2 = std::move(b);
  return mke(std::move(e));
}
SrcExprPtr s_fst(SrcExprPtr x) {
  SrcExpr e;
  e.kind = SK::Fst;
  e.e1 = std::move(x);
  return mke(std::move(e));
}
SrcExprPtr s_snd(SrcExprPtr x) {
  SrcExpr e;
  e.kind = SK::Snd;
  e.e1 = std::move(x);
  return mke(std::move(e));
}
SrcExprPtr s_true() {
  static const auto e = mke(SrcExpr{SK::True});
  return e;
}
SrcExprPtr s_false() {
  static const auto e = mke(SrcExpr{SK::False});
  return e;
}
SrcExprPtr s_if(SrcExprPtr c, SrcExprPtr t, SrcExprPtr f) {
  SrcExpr e;
  e.kind = SK::If;
  e.e1 = std::move(c);
  e.e2 = std::move(t);
  e.e3 = std::move(f);
  return mke(std::move(e));
}
SrcExprPtr s_lam(std::string x, SrcTypePtr t, SrcExprPtr body) {
  SrcExpr e;
  e.kind = SK::Lam;
  e.var = std::move(x);
  e.type = std::move(t);
  e.e1 = std::move(body);
  return mke(std::move(e));
}
SrcExprPtr s_app(SrcExprPtr f, SrcExprPtr a) {
  SrcExpr e;
  e.kind = SK::App;
  e.e1 = std::move(f);
  e.e2 = std::move(a);
  return mke(std::move(e));
}
SrcExprPtr s_recfun(std::string f, SrcTypePtr arg, SrcTypePtr res,
                    std::string x, SrcExprPtr body) {
  SrcExpr e;
  e.kind = SK::RecFun;
  e.var = std::move(f);
  e.var2 = std::move(x);
  e.type = std::move(arg);
  e.type2 = std::move(res);
  e.e1 = std::move(body);
  return mke(std::move(e));
}
SrcExprPtr s_fail(SrcTypePtr t) {
  SrcExpr e;
  e.kind = SK::Fail;
  e.type = std::move(t);
  return mke(std::move(e));
}
SrcExprPtr s_or(SrcExprPtr a, SrcExprPtr b) {
  SrcExpr e;
  e.kind = SK::Or;
  e.e1 = std::move(a);
  e.e2 = std::move(b);
  return mke(std::move(e));
}

bool equal(const SrcExprPtr& a, const SrcExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  auto eqe = [](const SrcExprPtr& x, const SrcExprPtr& y) {
    return (!x && !y) || (x && y && equal(x, y));
  };
  auto eqt = [](const SrcTypePtr& x, const SrcTypePtr& y) {
    return (!x && !y) || (x && y && equal(x, y));
  };
  return a->var == b->var && a->var2 == b->var2 && eqt(a->type, b->type) &&
         eqt(a->type2, b->type2) && eqe(a->e1, b->e1) && eqe(a->e2, b->e2) &&
         eqe(a->e3, b->e3);
}

namespace {
void collect(const SrcExprPtr& e, std::set<std::string>& bound,
             std::set<std::string>& out) {
  if (!e) return;
  switch (e->kind) {
    case SK::Var:
      if (!bound.count(e->var)) out.insert(e->var);
      return;
    case SK::Lam: {
      bool added = bound.insert(e->var).second;
      collect(e->e1, bound, out);
      if (added) bound.erase(e->var);
      return;
    }
    case SK::RecFun: {
      bool a1 = bound.insert(e->var).second;
      bool a2 = bound.insert(e->var2).second;
      collect(e->e1, bound, out);
      if (a2) bound.erase(e->var2);
      if (a1) bound.erase(e->var);
      return;
    }
    default:
      collect(e->e1, bound, out);
      collect(e->e2, bound, out);
      collect(e->e3, bound, out);
      return;
  }
}
}  // namespace

std::vector<std::string> free_vars(const SrcExprPtr& e) {
  std::set<std::string> bound, out;
  collect(e, bound, out);
  return {out.begin(), out.end()};
}

SrcContext::SrcContext(std::vector<std::pair<std::string, SrcTypePtr>> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i)
    for (size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].first == entries_[j].first)
        throw TypeError(Code::BadContext,
                        "duplicate identifier: " + entries_[i].first);
}

SrcContext SrcContext::extended(const std::string& name,
                                SrcTypePtr type) const {
  if (lookup(name))
    throw TypeError(Code::BadContext, "duplicate identifier: " + name);
  SrcContext out = *this;
  out.entries_.emplace_back(name, std::move(type));
  return out;
}

const SrcTypePtr* SrcContext::lookup(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.first == name) return &e.second;
  return nullptr;
}

SrcTypePtr check_src(const SrcContext& ctx, const SrcExprPtr& e,
                     EffectSignature sig) {
  switch (e->kind) {
    case SK::Var: {
      const SrcTypePtr* t = ctx.lookup(e->var);
      if (!t)
        throw TypeError(Code::UnboundVariable, "unbound variable: " + e->var);
      return *t;
    }
    case SK::Unit:
      return st_unit();
    case SK::True:
    case SK::False:
      return st_bool();
    case SK::Pair:
      return st_prod(check_src(ctx, e->e1, sig), check_src(ctx, e->e2, sig));
    case SK::Fst: {
      SrcTypePtr t = check_src(ctx, e->e1, sig);
      if (t->kind != SrcType::Kind::Prod)
        throw TypeError(Code::TypeMismatch, "fst of non-product " + show(t));
      return t->fst;
    }
    case SK::Snd: {
      SrcTypePtr t = check_src(ctx, e->e1, sig);
      if (t->kind != SrcType::Kind::Prod)
        throw TypeError(Code::TypeMismatch, "snd of non-product " + show(t));
      return t->snd;
    }
    case SK::If: {
      SrcTypePtr c = check_src(ctx, e->e1, sig);
      if (c->kind != SrcType::Kind::Bool)
        throw TypeError(Code::TypeMismatch, "if condition not bool");
      SrcTypePtr t1 = check_src(ctx, e->e2, sig);
      SrcTypePtr t2 = check_src(ctx, e->e3, sig);
      if (!equal(t1, t2))
        throw TypeError(Code::TypeMismatch, "if branch types differ");
      return t1;
    }
    case SK::Lam:
      return st_arrow(e->type,
                      check_src(ctx.extended(e->var, e->type), e->e1, sig));
    case SK::App: {
      SrcTypePtr f = check_src(ctx, e->e1, sig);
      SrcTypePtr a = check_src(ctx, e->e2, sig);
      if (f->kind != SrcType::Kind::Arrow)
        throw TypeError(Code::TypeMismatch, "applying non-function " + show(f));
      if (!equal(f->fst, a))
        throw TypeError(Code::TypeMismatch,
                        "argument type " + show(a) + " does not match " +
                            show(f->fst));
      return f->snd;
    }
    case SK::RecFun: {
      if (!allows_rec(sig))
        throw TypeError(Code::EffectNotAllowed,
                        "recfun not allowed by effect signature");
      SrcTypePtr fty = st_arrow(e->type, e->type2);
      SrcTypePtr body = check_src(
          ctx.extended(e->var, fty).extended(e->var2, e->type), e->e1, sig);
      if (!equal(body, e->type2))
        throw TypeError(Code::TypeMismatch,
                        "recfun body type does not match annotation");
      return fty;
    }
    case SK::Fail:
      if (!allows_nondet(sig))
        throw TypeError(Code::EffectNotAllowed,
                        "fail not allowed by effect signature");
      return e->type;
    case SK::Or: {
      if (!allows_nondet(sig))
        throw TypeError(Code::EffectNotAllowed,
                        "or not allowed by effect signature");
      SrcTypePtr t1 = check_src(ctx, e->e1, sig);
      SrcTypePtr t2 = check_src(ctx, e->e2, sig);
      if (!equal(t1, t2))
        throw TypeError(Code::TypeMismatch, "or alternative types differ");
      return t1;
    }
  }
  throw TypeError(Code::TypeMismatch, "unreachable");
}

}  // namespace cbpv::src

#include "cbpv/core/check.hpp"

namespace cbpv {

namespace {
using VK = ValueTerm::Kind;
using CK = CompTerm::Kind;
using Code = TypeError::Code;

[[noreturn]] void mismatch(const std::string& where, const std::string& msg) {
  throw TypeError(Code::TypeMismatch, msg, where);
}
}  // namespace

TypingContext::TypingContext(
    std::vector<std::pair<std::string, ValueTypePtr>> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first.empty())
      throw TypeError(Code::BadContext, "empty identifier in context");
    for (size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].first == entries_[j].first)
        throw TypeError(Code::BadContext,
                        "duplicate identifier: " + entries_[i].first);
  }
}

TypingContext TypingContext::extended(const std::string& name,
                                      ValueTypePtr type) const {
  if (lookup(name))
    throw TypeError(Code::BadContext, "duplicate identifier: " + name);
  TypingContext out = *this;
  out.entries_.emplace_back(name, std::move(type));
  return out;
}

const ValueTypePtr* TypingContext::lookup(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.first == name) return &e.second;
  return nullptr;
}

ValueTypePtr check_value(const TypingContext& ctx, const ValuePtr& v,
                         EffectSignature sig) {
  switch (v->kind) {
    case VK::Var: {
      const ValueTypePtr* t = ctx.lookup(v->var);
      if (!t)
        throw TypeError(Code::UnboundVariable, "unbound variable: " + v->var);
      return *t;
    }
    case VK::Unit:
      return vt_unit();
    case VK::True:
    case VK::False:
      return vt_bool();
    case VK::Pair:
      return vt_prod(check_value(ctx, v->fst, sig),
                     check_value(ctx, v->snd, sig));
    case VK::Thunk:
      return vt_thunk(check_comp(ctx, v->comp, sig));
  }
  mismatch("value", "unreachable");
}

CompTypePtr check_comp(const TypingContext& ctx, const CompPtr& m,
                       EffectSignature sig) {
  switch (m->kind) {
    case CK::CompPair:
      return ct_cprod(check_comp(ctx, m->m1, sig), check_comp(ctx, m->m2, sig));
    case CK::Proj: {
      CompTypePtr c = check_comp(ctx, m->m1, sig);
      if (c->kind != CompType::Kind::CompProd)
        mismatch("proj", "projection from non-product type " + show(c));
      return m->index == 1 ? c->cfst : c->csnd;
    }
    case CK::Lam:
      return ct_arrow(m->vtype,
                      check_comp(ctx.extended(m->var, m->vtype), m->m1, sig));
    case CK::Push: {
      ValueTypePtr a = check_value(ctx, m->val, sig);
      CompTypePtr c = check_comp(ctx, m->m1, sig);
      if (c->kind != CompType::Kind::Arrow)
        mismatch("push", "application of non-function type " + show(c));
      if (!equal(c->arg, a))
        mismatch("push", "argument type " + show(a) + " does not match " +
                             show(c->arg));
      return c->body;
    }
    case CK::Return:
      return ct_free(check_value(ctx, m->val, sig));
    case CK::To: {
      CompTypePtr c = check_comp(ctx, m->m1, sig);
      if (c->kind != CompType::Kind::Free)
        mismatch("to", "sequenced computation has non-returner type " +
                           show(c));
      return check_comp(ctx.extended(m->var, c->arg), m->m2, sig);
    }
    case CK::MatchPair: {
      ValueTypePtr a = check_value(ctx, m->val, sig);
      if (a->kind != ValueType::Kind::Prod)
        mismatch("match", "scrutinee has non-product type " + show(a));
      return check_comp(
          ctx.extended(m->var, a->fst).extended(m->var2, a->snd), m->m1, sig);
    }
    case CK::If: {
      ValueTypePtr a = check_value(ctx, m->val, sig);
      if (a->kind != ValueType::Kind::Bool)
        mismatch("if", "condition has non-bool type " + show(a));
      CompTypePtr c1 = check_comp(ctx, m->m1, sig);
      CompTypePtr c2 = check_comp(ctx, m->m2, sig);
      if (!equal(c1, c2))
        mismatch("if", "branch types differ: " + show(c1) + " vs " + show(c2));
      return c1;
    }
    case CK::Force: {
      ValueTypePtr a = check_value(ctx, m->val, sig);
      if (a->kind != ValueType::Kind::Thunk)
        mismatch("force", "forcing non-thunk type " + show(a));
      return a->comp;
    }
    case CK::Rec: {
      if (!allows_rec(sig))
        throw TypeError(Code::EffectNotAllowed,
                        "rec not allowed by effect signature");
      CompTypePtr c =
          check_comp(ctx.extended(m->var, vt_thunk(m->ctype)), m->m1, sig);
      if (!equal(c, m->ctype))
        mismatch("rec", "body type " + show(c) + " does not match annotation " +
                            show(m->ctype));
      return m->ctype;
    }
    case CK::Fail:
      if (!allows_nondet(sig))
        throw TypeError(Code::EffectNotAllowed,
                        "fail not allowed by effect signature");
      return m->ctype;
    case CK::Or: {
      if (!allows_nondet(sig))
        throw TypeError(Code::EffectNotAllowed,
                        "or not allowed by effect signature");
      CompTypePtr c1 = check_comp(ctx, m->m1, sig);
      CompTypePtr c2 = check_comp(ctx, m->m2, sig);
      if (!equal(c1, c2))
        mismatch("or", "alternative types differ: " + show(c1) + " vs " +
                           show(c2));
      return c1;
    }
  }
  mismatch("comp", "unreachable");
}

}  // namespace cbpv

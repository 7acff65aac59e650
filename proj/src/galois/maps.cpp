#include "cbpv/galois/maps.hpp"

#include "cbpv/source/translate.hpp"

namespace cbpv::galois {

using src::SrcType;
using src::SrcTypePtr;

CompPtr to_name(const SrcTypePtr& t, const CompPtr& m) {
  std::string x = fresh_name("x");
  return c_to(m, x, to_name_hat(t, v_var(x)));
}

CompPtr to_name_hat(const SrcTypePtr& t, const ValuePtr& v) {
  switch (t->kind) {
    case SrcType::Kind::Unit:
    case SrcType::Kind::Bool:
      return c_return(v);
    case SrcType::Kind::Prod: {
      std::string z1 = fresh_name("z1");
      std::string z2 = fresh_name("z2");
      return c_match(v, z1, z2,
                     c_cpair(to_name_hat(t->fst, v_var(z1)),
                             to_name_hat(t->snd, v_var(z2))));
    }
    case SrcType::Kind::Arrow: {
      std::string x = fresh_name("x");
      std::string y = fresh_name("y");
      std::string z = fresh_name("z");
      return c_lam(x, vt_thunk(src::cbn_type(t->fst)),
                   c_to(to_value(t->fst, c_force(v_var(x))), y,
                        c_to(c_push(v_var(y), c_force(v)), z,
                             to_name_hat(t->snd, v_var(z)))));
    }
  }
  return nullptr;
}

CompPtr to_value(const SrcTypePtr& t, const CompPtr& n) {
  switch (t->kind) {
    case SrcType::Kind::Unit:
    case SrcType::Kind::Bool:
      return n;
    case SrcType::Kind::Prod: {
      std::string z1 = fresh_name("z1");
      std::string z2 = fresh_name("z2");
      return c_to(to_value(t->fst, c_proj(1, n)), z1,
                  c_to(to_value(t->snd, c_proj(2, n)), z2,
                       c_return(v_pair(v_var(z1), v_var(z2)))));
    }
    case SrcType::Kind::Arrow: {
      std::string x = fresh_name("x");
      return c_return(v_thunk(c_lam(
          x, src::cbv_type(t->fst),
          to_value(t->snd,
                   c_push(v_thunk(to_name_hat(t->fst, v_var(x))), n)))));
    }
  }
  return nullptr;
}

Subst ctx_thunk_subst(const src::SrcContext& ctx) {
  Subst s;
  for (const auto& [x, t] : ctx.entries())
    s[x] = v_thunk(to_name_hat(t, v_var(x)));
  return s;
}

CompPtr rhs_term(const src::SrcContext& ctx, const src::SrcExprPtr& e,
                 const src::SrcTypePtr& t) {
  CompPtr n = substitute(src::cbn_translate(e), ctx_thunk_subst(ctx));
  return to_value(t, n);
}

}  // namespace cbpv::galois

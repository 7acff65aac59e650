#include "cbpv/source/translate.hpp"

namespace cbpv::src {

namespace {
using SK = SrcExpr::Kind;
}

ValueTypePtr cbv_type(const SrcTypePtr& t) {
  switch (t->kind) {
    case SrcType::Kind::Unit:
      return vt_unit();
    case SrcType::Kind::Bool:
      return vt_bool();
    case SrcType::Kind::Prod:
      return vt_prod(cbv_type(t->fst), cbv_type(t->snd));
    case SrcType::Kind::Arrow:
      return vt_thunk(ct_arrow(cbv_type(t->fst), ct_free(cbv_type(t->snd))));
  }
  return nullptr;
}

CompTypePtr cbn_type(const SrcTypePtr& t) {
  switch (t->kind) {
    case SrcType::Kind::Unit:
      return ct_free(vt_unit());
    case SrcType::Kind::Bool:
      return ct_free(vt_bool());
    case SrcType::Kind::Prod:
      return ct_cprod(cbn_type(t->fst), cbn_type(t->snd));
    case SrcType::Kind::Arrow:
      return ct_arrow(vt_thunk(cbn_type(t->fst)), cbn_type(t->snd));
  }
  return nullptr;
}

TypingContext cbv_ctx(const SrcContext& ctx) {
  std::vector<std::pair<std::string, ValueTypePtr>> entries;
  for (const auto& [x, t] : ctx.entries()) entries.emplace_back(x, cbv_type(t));
  return TypingContext{std::move(entries)};
}

TypingContext cbn_ctx(const SrcContext& ctx) {
  std::vector<std::pair<std::string, ValueTypePtr>> entries;
  for (const auto& [x, t] : ctx.entries())
    entries.emplace_back(x, vt_thunk(cbn_type(t)));
  return TypingContext{std::move(entries)};
}

namespace {

// Shared by cbv_translate and rtl_translate; the two differ only on pairs.
CompPtr value_like_translate(const SrcExprPtr& e, bool right_to_left) {
  auto tr = [&](const SrcExprPtr& sub) {
    return value_like_translate(sub, right_to_left);
  };
  switch (e->kind) {
    case SK::Var:
      return c_return(v_var(e->var));
    case SK::Unit:
      return c_return(v_unit());
    case SK::True:
      return c_return(v_true());
    case SK::False:
      return c_return(v_false());
    case SK::Pair: {
      std::string z1 = fresh_name("z1");
      std::string z2 = fresh_name("z2");
      CompPtr body = c_return(v_pair(v_var(z1), v_var(z2)));
      if (right_to_left)
        return c_to(tr(e->e2), z2, c_to(tr(e->e1), z1, body));
      return c_to(tr(e->e1), z1, c_to(tr(e->e2), z2, body));
    }
    case SK::Fst: {
      std::string z = fresh_name("z");
      std::string z1 = fresh_name("z1");
      std::string z2 = fresh_name("z2");
      return c_to(tr(e->e1), z,
                  c_match(v_var(z), z1, z2, c_return(v_var(z1))));
    }
    case SK::Snd: {
      std::string z = fresh_name("z");
      std::string z1 = fresh_name("z1");
      std::string z2 = fresh_name("z2");
      return c_to(tr(e->e1), z,
                  c_match(v_var(z), z1, z2, c_return(v_var(z2))));
    }
    case SK::If: {
      std::string z = fresh_name("z");
      return c_to(tr(e->e1), z, c_if(v_var(z), tr(e->e2), tr(e->e3)));
    }
    case SK::Lam:
      return c_return(v_thunk(c_lam(e->var, cbv_type(e->type), tr(e->e1))));
    case SK::App: {
      std::string y = fresh_name("y");
      std::string z = fresh_name("z");
      return c_to(tr(e->e1), y,
                  c_to(tr(e->e2), z, c_push(v_var(z), c_force(v_var(y)))));
    }
    case SK::RecFun: {
      CompTypePtr fc = ct_arrow(cbv_type(e->type), ct_free(cbv_type(e->type2)));
      return c_return(v_thunk(
          c_rec(e->var, fc, c_lam(e->var2, cbv_type(e->type), tr(e->e1)))));
    }
    case SK::Fail:
      return c_fail(ct_free(cbv_type(e->type)));
    case SK::Or:
      return c_or(tr(e->e1), tr(e->e2));
  }
  return nullptr;
}

}  // namespace

CompPtr cbv_translate(const SrcExprPtr& e) {
  return value_like_translate(e, false);
}

CompPtr rtl_translate(const SrcExprPtr& e) {
  return value_like_translate(e, true);
}

CompPtr cbn_translate(const SrcExprPtr& e) {
  switch (e->kind) {
    case SK::Var:
      return c_force(v_var(e->var));
    case SK::Unit:
      return c_return(v_unit());
    case SK::True:
      return c_return(v_true());
    case SK::False:
      return c_return(v_false());
    case SK::Pair:
      return c_cpair(cbn_translate(e->e1), cbn_translate(e->e2));
    case SK::Fst:
      return c_proj(1, cbn_translate(e->e1));
    case SK::Snd:
      return c_proj(2, cbn_translate(e->e1));
    case SK::If: {
      std::string z = fresh_name("z");
      return c_to(cbn_translate(e->e1), z,
                  c_if(v_var(z), cbn_translate(e->e2), cbn_translate(e->e3)));
    }
    case SK::Lam:
      return c_lam(e->var, vt_thunk(cbn_type(e->type)), cbn_translate(e->e1));
    case SK::App:
      return c_push(v_thunk(cbn_translate(e->e2)), cbn_translate(e->e1));
    case SK::RecFun: {
      CompTypePtr fc =
          ct_arrow(vt_thunk(cbn_type(e->type)), cbn_type(e->type2));
      return c_rec(e->var, fc,
                   c_lam(e->var2, vt_thunk(cbn_type(e->type)),
                         cbn_translate(e->e1)));
    }
    case SK::Fail:
      return c_fail(cbn_type(e->type));
    case SK::Or:
      return c_or(cbn_translate(e->e1), cbn_translate(e->e2));
  }
  return nullptr;
}

}  // namespace cbpv::src

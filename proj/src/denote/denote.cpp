#include "cbpv/denote/denote.hpp"

namespace cbpv::den {

using order::alg_extend1;
using order::compose;
using order::constant_map;
using order::copair_map;
using order::dist_map;
using order::Exp;
using order::exponential_algebra;
using order::free_algebra;
using order::id_map;
using order::pair_map;
using order::product;
using order::product_algebra;
using order::product_map;
using order::proj1_map;
using order::proj2_map;
using order::seq;
using order::terminal_map;
using order::terminal_poset;
using order::two;

namespace {

ModelPtr make_model(std::string name, MonadPtr monad, bool rec, bool nondet) {
  auto m = std::make_shared<Model>();
  m->name = std::move(name);
  m->monad = std::move(monad);
  m->supports_rec = rec;
  m->supports_nondet = nondet;
  return m;
}

}  // namespace

ModelPtr identity_model() {
  static const ModelPtr m =
      make_model("id", order::identity_monad(), false, false);
  return m;
}

ModelPtr lift_model() {
  static const ModelPtr m = make_model("lift", order::lift_monad(), true, false);
  return m;
}

ModelPtr downset_model() {
  static const ModelPtr m =
      make_model("downset", order::downset_monad(), false, true);
  return m;
}

ModelPtr writer_model() {
  static const ModelPtr m =
      make_model("writer", order::writer_monad(), false, false);
  return m;
}

ModelPtr model_by_name(const std::string& name) {
  if (name == "id") return identity_model();
  if (name == "lift") return lift_model();
  if (name == "downset") return downset_model();
  if (name == "writer") return writer_model();
  throw std::invalid_argument("unknown model: " + name);
}

ModelPtr model_for(EffectSignature sig) {
  switch (sig) {
    case EffectSignature::Pure:
      return identity_model();
    case EffectSignature::Div:
      return lift_model();
    case EffectSignature::Nondet:
      return downset_model();
  }
  return identity_model();
}

EffectSignature signature_of(const ModelPtr& model) {
  if (model->supports_rec) return EffectSignature::Div;
  if (model->supports_nondet) return EffectSignature::Nondet;
  return EffectSignature::Pure;
}

PosetPtr interp_vtype(const ValueTypePtr& a, const ModelPtr& model) {
  switch (a->kind) {
    case ValueType::Kind::Unit:
      return terminal_poset();
    case ValueType::Kind::Bool:
      return two();
    case ValueType::Kind::Prod:
      return product(interp_vtype(a->fst, model), interp_vtype(a->snd, model));
    case ValueType::Kind::Thunk:
      return interp_ctype(a->comp, model)->carrier;
  }
  return nullptr;
}

AlgebraPtr interp_ctype(const CompTypePtr& c, const ModelPtr& model) {
  switch (c->kind) {
    case CompType::Kind::Free:
      return free_algebra(model->monad, interp_vtype(c->arg, model));
    case CompType::Kind::CompProd:
      return product_algebra(interp_ctype(c->cfst, model),
                             interp_ctype(c->csnd, model));
    case CompType::Kind::Arrow:
      return exponential_algebra(interp_vtype(c->arg, model),
                                 interp_ctype(c->body, model));
  }
  return nullptr;
}

PosetPtr interp_ctx(const TypingContext& ctx, const ModelPtr& model) {
  PosetPtr g = terminal_poset();
  for (const auto& [x, a] : ctx.entries()) g = product(g, interp_vtype(a, model));
  return g;
}

namespace {

struct VDen {
  ValueTypePtr type;
  MonotoneMap map;
};

struct CDen {
  CompTypePtr type;
  AlgebraPtr alg;
  MonotoneMap map;
};

struct Interp {
  ModelPtr model;

  VDen value(const TypingContext& ctx, const PosetPtr& g, const ValuePtr& v);
  CDen comp(const TypingContext& ctx, const PosetPtr& g, const CompPtr& m);
};

VDen Interp::value(const TypingContext& ctx, const PosetPtr& g,
                   const ValuePtr& v) {
  switch (v->kind) {
    case ValueTerm::Kind::Var: {
      const auto& entries = ctx.entries();
      std::vector<PosetPtr> prefixes{terminal_poset()};
      std::vector<PosetPtr> carriers;
      int where = -1;
      for (size_t k = 0; k < entries.size(); ++k) {
        carriers.push_back(interp_vtype(entries[k].second, model));
        prefixes.push_back(product(prefixes.back(), carriers.back()));
        if (entries[k].first == v->var) where = static_cast<int>(k);
      }
      if (where < 0)
        throw TypeError(TypeError::Code::UnboundVariable,
                        "unbound variable " + v->var);
      MonotoneMap m = proj2_map(prefixes[where], carriers[where]);
      for (size_t k = where + 1; k < entries.size(); ++k)
        m = compose(m, proj1_map(prefixes[k], carriers[k]));
      return {entries[where].second, std::move(m)};
    }
    case ValueTerm::Kind::Unit:
      return {vt_unit(), terminal_map(g)};
    case ValueTerm::Kind::True:
      return {vt_bool(), constant_map(g, two(), 0)};
    case ValueTerm::Kind::False:
      return {vt_bool(), constant_map(g, two(), 1)};
    case ValueTerm::Kind::Pair: {
      VDen a = value(ctx, g, v->fst);
      VDen b = value(ctx, g, v->snd);
      return {vt_prod(a.type, b.type), pair_map(a.map, b.map)};
    }
    case ValueTerm::Kind::Thunk: {
      CDen m = comp(ctx, g, v->comp);
      return {vt_thunk(m.type), m.map};
    }
  }
  throw std::logic_error("unreachable");
}

CDen Interp::comp(const TypingContext& ctx, const PosetPtr& g,
                  const CompPtr& m) {
  switch (m->kind) {
    case CompTerm::Kind::Return: {
      VDen v = value(ctx, g, m->val);
      PosetPtr a = interp_vtype(v.type, model);
      AlgebraPtr alg = free_algebra(model->monad, a);
      return {ct_free(v.type), alg, compose(model->monad->unit(a), v.map)};
    }
    case CompTerm::Kind::To: {
      CDen dm = comp(ctx, g, m->m1);
      ValueTypePtr a = dm.type->arg;
      PosetPtr pa = interp_vtype(a, model);
      CDen dn = comp(ctx.extended(m->var, a), product(g, pa), m->m2);
      MonotoneMap ext = dn.alg->alg_extend(g, pa, dn.map);
      return {dn.type, dn.alg, compose(ext, pair_map(id_map(g), dm.map))};
    }
    case CompTerm::Kind::Lam: {
      PosetPtr pa = interp_vtype(m->vtype, model);
      CDen body = comp(ctx.extended(m->var, m->vtype), product(g, pa), m->m1);
      auto exp = std::make_shared<const Exp>(pa, body.alg->carrier);
      AlgebraPtr alg = exponential_algebra(exp, body.alg);
      return {ct_arrow(m->vtype, body.type), alg, exp->curry(body.map, g)};
    }
    case CompTerm::Kind::Push: {
      CDen dm = comp(ctx, g, m->m1);
      VDen dv = value(ctx, g, m->val);
      PosetPtr pa = interp_vtype(dm.type->arg, model);
      AlgebraPtr alg = interp_ctype(dm.type->body, model);
      Exp exp(pa, alg->carrier);
      return {dm.type->body, alg,
              compose(exp.ev(), pair_map(dm.map, dv.map))};
    }
    case CompTerm::Kind::Force: {
      VDen dv = value(ctx, g, m->val);
      CompTypePtr c = dv.type->comp;
      return {c, interp_ctype(c, model), dv.map};
    }
    case CompTerm::Kind::CompPair: {
      CDen d1 = comp(ctx, g, m->m1);
      CDen d2 = comp(ctx, g, m->m2);
      return {ct_cprod(d1.type, d2.type), product_algebra(d1.alg, d2.alg),
              pair_map(d1.map, d2.map)};
    }
    case CompTerm::Kind::Proj: {
      CDen dm = comp(ctx, g, m->m1);
      AlgebraPtr a1 = interp_ctype(dm.type->cfst, model);
      AlgebraPtr a2 = interp_ctype(dm.type->csnd, model);
      MonotoneMap p = m->index == 1 ? proj1_map(a1->carrier, a2->carrier)
                                    : proj2_map(a1->carrier, a2->carrier);
      return {m->index == 1 ? dm.type->cfst : dm.type->csnd,
              m->index == 1 ? a1 : a2, compose(p, dm.map)};
    }
    case CompTerm::Kind::If: {
      VDen dv = value(ctx, g, m->val);
      CDen d1 = comp(ctx, g, m->m1);
      CDen d2 = comp(ctx, g, m->m2);
      MonotoneMap body = compose(copair_map(d1.map, d2.map),
                                 compose(dist_map(g),
                                         pair_map(id_map(g), dv.map)));
      return {d1.type, d1.alg, std::move(body)};
    }
    case CompTerm::Kind::MatchPair: {
      VDen dv = value(ctx, g, m->val);
      ValueTypePtr a1 = dv.type->fst, a2 = dv.type->snd;
      PosetPtr p1 = interp_vtype(a1, model);
      PosetPtr p2 = interp_vtype(a2, model);
      CDen dm = comp(ctx.extended(m->var, a1).extended(m->var2, a2),
                     product(product(g, p1), p2), m->m1);
      MonotoneMap v1 = compose(proj1_map(p1, p2), dv.map);
      MonotoneMap v2 = compose(proj2_map(p1, p2), dv.map);
      MonotoneMap env = pair_map(pair_map(id_map(g), v1), v2);
      return {dm.type, dm.alg, compose(dm.map, env)};
    }
    case CompTerm::Kind::Rec: {
      if (!model->supports_rec)
        throw EffectUnsupported("rec is not interpreted in model " +
                                model->name);
      AlgebraPtr alg = interp_ctype(m->ctype, model);
      const PosetPtr& z = alg->carrier;
      auto bottom = z->least();
      if (!bottom)
        throw EffectUnsupported("rec needs a least element in the carrier");
      CDen body = comp(ctx.extended(m->var, vt_thunk(m->ctype)),
                       product(g, z), m->m1);
      std::vector<int> cur(g->size(), *bottom);
      for (int round = 0; round <= z->size(); ++round) {
        std::vector<int> next(g->size());
        for (int i = 0; i < g->size(); ++i)
          next[i] = body.map(order::pair_index(z, i, cur[i]));
        if (next == cur) break;
        cur = std::move(next);
      }
      return {m->ctype, alg, MonotoneMap(g, z, std::move(cur))};
    }
    case CompTerm::Kind::Fail: {
      if (!model->supports_nondet)
        throw EffectUnsupported("fail is not interpreted in model " +
                                model->name);
      AlgebraPtr alg = interp_ctype(m->ctype, model);
      auto bottom = alg->carrier->least();
      if (!bottom)
        throw EffectUnsupported("fail needs a least element in the carrier");
      return {m->ctype, alg, constant_map(g, alg->carrier, *bottom)};
    }
    case CompTerm::Kind::Or: {
      if (!model->supports_nondet)
        throw EffectUnsupported("or is not interpreted in model " +
                                model->name);
      CDen d1 = comp(ctx, g, m->m1);
      CDen d2 = comp(ctx, g, m->m2);
      const PosetPtr& z = d1.alg->carrier;
      std::vector<int> t(g->size());
      for (int i = 0; i < g->size(); ++i) {
        auto j = z->join(d1.map(i), d2.map(i));
        if (!j) throw EffectUnsupported("or needs joins in the carrier");
        t[i] = *j;
      }
      return {d1.type, d1.alg, MonotoneMap(g, z, std::move(t))};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

MonotoneMap interp_value(const TypingContext& ctx, const ValuePtr& v,
                         const ModelPtr& model) {
  Interp in{model};
  return in.value(ctx, interp_ctx(ctx, model), v).map;
}

MonotoneMap interp_comp(const TypingContext& ctx, const CompPtr& m,
                        const ModelPtr& model) {
  Interp in{model};
  return in.comp(ctx, interp_ctx(ctx, model), m).map;
}

MonotoneMap tonamehat_sem(const src::SrcTypePtr& t, const ModelPtr& model) {
  const MonadPtr& mo = model->monad;
  switch (t->kind) {
    case src::SrcType::Kind::Bool:
      return mo->unit(two());
    case src::SrcType::Kind::Unit:
      return mo->unit(terminal_poset());
    case src::SrcType::Kind::Prod:
      return product_map(tonamehat_sem(t->fst, model),
                         tonamehat_sem(t->snd, model));
    case src::SrcType::Kind::Arrow: {
      PosetPtr va = interp_vtype(src::cbv_type(t->fst), model);
      PosetPtr vb = interp_vtype(src::cbv_type(t->snd), model);
      AlgebraPtr nb = interp_ctype(src::cbn_type(t->snd), model);
      AlgebraPtr na = interp_ctype(src::cbn_type(t->fst), model);
      Exp exp_v(va, mo->apply_obj(vb));
      PosetPtr w = exp_v.poset();
      MonotoneMap inner = nb->alg_extend(
          w, va, compose(phi(t->snd, model), exp_v.ev()));
      MonotoneMap body =
          compose(inner, product_map(id_map(w), psi(t->fst, model)));
      Exp exp_n(na->carrier, nb->carrier);
      return exp_n.curry(body, w);
    }
  }
  throw std::logic_error("unreachable");
}

MonotoneMap phi(const src::SrcTypePtr& t, const ModelPtr& model) {
  return alg_extend1(interp_ctype(src::cbn_type(t), model),
                     tonamehat_sem(t, model));
}

MonotoneMap psi(const src::SrcTypePtr& t, const ModelPtr& model) {
  const MonadPtr& mo = model->monad;
  switch (t->kind) {
    case src::SrcType::Kind::Bool:
      return id_map(mo->apply_obj(two()));
    case src::SrcType::Kind::Unit:
      return id_map(mo->apply_obj(terminal_poset()));
    case src::SrcType::Kind::Prod: {
      PosetPtr n1 = interp_ctype(src::cbn_type(t->fst), model)->carrier;
      PosetPtr n2 = interp_ctype(src::cbn_type(t->snd), model)->carrier;
      PosetPtr v1 = interp_vtype(src::cbv_type(t->fst), model);
      PosetPtr v2 = interp_vtype(src::cbv_type(t->snd), model);
      MonotoneMap pm =
          pair_map(compose(psi(t->fst, model), proj1_map(n1, n2)),
                   compose(psi(t->snd, model), proj2_map(n1, n2)));
      return compose(seq(mo, v1, v2), pm);
    }
    case src::SrcType::Kind::Arrow: {
      PosetPtr va = interp_vtype(src::cbv_type(t->fst), model);
      PosetPtr vb = interp_vtype(src::cbv_type(t->snd), model);
      AlgebraPtr na = interp_ctype(src::cbn_type(t->fst), model);
      AlgebraPtr nb = interp_ctype(src::cbn_type(t->snd), model);
      Exp exp_n(na->carrier, nb->carrier);
      Exp exp_v(va, mo->apply_obj(vb));
      MonotoneMap hom = exp_n.hom_map(exp_v, tonamehat_sem(t->fst, model),
                                      psi(t->snd, model));
      return compose(mo->unit(exp_v.poset()), hom);
    }
  }
  throw std::logic_error("unreachable");
}

MonotoneMap tonamehat_ctx(const src::SrcContext& ctx, const ModelPtr& model) {
  MonotoneMap cur = id_map(terminal_poset());
  for (const auto& [x, t] : ctx.entries())
    cur = product_map(cur, tonamehat_sem(t, model));
  return cur;
}

MonotoneMap tovalue_ctx(const src::SrcContext& ctx, const ModelPtr& model) {
  const MonadPtr& mo = model->monad;
  MonotoneMap cur = mo->unit(terminal_poset());
  PosetPtr vg = terminal_poset();
  for (const auto& [x, t] : ctx.entries()) {
    PosetPtr vt = interp_vtype(src::cbv_type(t), model);
    cur = compose(seq(mo, vg, vt), product_map(cur, psi(t, model)));
    vg = product(vg, vt);
  }
  return cur;
}

}  // namespace cbpv::den

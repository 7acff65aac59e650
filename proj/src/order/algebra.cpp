#include "cbpv/order/algebra.hpp"

namespace cbpv::order {

namespace {

MonotoneMap redomain(const MonotoneMap& f, const PosetPtr& dom) {
  return MonotoneMap(dom, f.cod(), f.table());
}

}  // namespace

AlgebraPtr free_algebra(const MonadPtr& m, const PosetPtr& x) {
  auto alg = std::make_shared<Algebra>();
  alg->monad = m;
  alg->carrier = m->apply_obj(x);
  alg->alg_extend = [m, x](const PosetPtr& w, const PosetPtr& dom_x,
                           const MonotoneMap& f) {
    return m->strong_extend(w, dom_x, x, f);
  };
  return alg;
}

AlgebraPtr product_algebra(const AlgebraPtr& z1, const AlgebraPtr& z2) {
  auto alg = std::make_shared<Algebra>();
  alg->monad = z1->monad;
  alg->carrier = product(z1->carrier, z2->carrier);
  alg->alg_extend = [z1, z2](const PosetPtr& w, const PosetPtr& x,
                             const MonotoneMap& f) {
    MonotoneMap p1 = proj1_map(z1->carrier, z2->carrier);
    MonotoneMap p2 = proj2_map(z1->carrier, z2->carrier);
    MonotoneMap e1 = z1->alg_extend(w, x, compose(p1, f));
    MonotoneMap e2 = z2->alg_extend(w, x, compose(p2, f));
    return pair_map(e1, e2);
  };
  return alg;
}

AlgebraPtr exponential_algebra(const PosetPtr& y, const AlgebraPtr& z) {
  return exponential_algebra(std::make_shared<const Exp>(y, z->carrier), z);
}

AlgebraPtr exponential_algebra(const std::shared_ptr<const Exp>& exp,
                               const AlgebraPtr& z) {
  PosetPtr y = exp->base();
  auto alg = std::make_shared<Algebra>();
  alg->monad = z->monad;
  alg->carrier = exp->poset();
  alg->alg_extend = [y, z, exp](const PosetPtr& w, const PosetPtr& x,
                                const MonotoneMap& f) {
    PosetPtr tx = z->monad->apply_obj(x);
    MonotoneMap g = compose(exp->uncurry(f), beta_map(w, y, x));
    MonotoneMap e = z->alg_extend(product(w, y), x, g);
    MonotoneMap h = compose(e, beta_map(w, tx, y));
    return exp->curry(h, product(w, tx));
  };
  return alg;
}

MonotoneMap alg_extend1(const AlgebraPtr& alg, const MonotoneMap& f) {
  const PosetPtr& x = f.dom();
  MonotoneMap f1 = redomain(f, product(terminal_poset(), x));
  MonotoneMap e = alg->alg_extend(terminal_poset(), x, f1);
  return redomain(e, alg->monad->apply_obj(x));
}

MonotoneMap strong_extendr(const MonadPtr& m, const PosetPtr& x,
                           const PosetPtr& w, const PosetPtr& y,
                           const MonotoneMap& f) {
  MonotoneMap g = compose(f, swap_map(w, x));
  MonotoneMap e = m->strong_extend(w, x, y, g);
  return compose(e, swap_map(m->apply_obj(x), w));
}

MonotoneMap seq(const MonadPtr& m, const PosetPtr& x1, const PosetPtr& x2) {
  PosetPtr prod = product(x1, x2);
  MonotoneMap inner = m->strong_extend(x1, x2, prod, m->unit(prod));
  return strong_extendr(m, x1, m->apply_obj(x2), prod, inner);
}

MonotoneMap seqr(const MonadPtr& m, const PosetPtr& x1, const PosetPtr& x2) {
  PosetPtr prod = product(x1, x2);
  MonotoneMap inner = strong_extendr(m, x1, x2, prod, m->unit(prod));
  return m->strong_extend(m->apply_obj(x1), x2, prod, inner);
}

int least_fixpoint(const MonotoneMap& f) {
  auto bottom = f.dom()->least();
  if (!bottom) throw std::invalid_argument("carrier has no least element");
  int z = *bottom;
  for (int i = 0; i <= f.dom()->size(); ++i) {
    int next = f(z);
    if (next == z) return z;
    z = next;
  }
  throw std::logic_error("fixpoint iteration failed to stabilize");
}

}  // namespace cbpv::order

#pragma once

#include "cbpv/order/monad.hpp"

namespace cbpv::order {

// An Eilenberg-Moore algebra presented by its extension operator:
// alg_extend turns f : W x X -> Z into a map W x TX -> Z.
struct Algebra {
  MonadPtr monad;
  PosetPtr carrier;
  std::function<MonotoneMap(const PosetPtr& w, const PosetPtr& x,
                            const MonotoneMap& f)>
      alg_extend;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr free_algebra(const MonadPtr& m, const PosetPtr& x);
AlgebraPtr product_algebra(const AlgebraPtr& z1, const AlgebraPtr& z2);
// Carrier Z^Y with the pointwise structure. The overload taking a
// prebuilt exponential shares its element enumeration.
AlgebraPtr exponential_algebra(const PosetPtr& y, const AlgebraPtr& z);
AlgebraPtr exponential_algebra(const std::shared_ptr<const Exp>& exp,
                               const AlgebraPtr& z);

// W = 1 specialization: f : X -> Z gives TX -> Z.
MonotoneMap alg_extend1(const AlgebraPtr& alg, const MonotoneMap& f);

// extendr f = extend(f . swap) . swap, turning X x W -> TY into
// TX x W -> TY.
MonotoneMap strong_extendr(const MonadPtr& m, const PosetPtr& x,
                           const PosetPtr& w, const PosetPtr& y,
                           const MonotoneMap& f);

// Sequencing TX1 x TX2 -> T(X1 x X2): seq evaluates left-to-right
// (extendr(extend eta)), seqr right-to-left (extend(extendr eta)).
MonotoneMap seq(const MonadPtr& m, const PosetPtr& x1, const PosetPtr& x2);
MonotoneMap seqr(const MonadPtr& m, const PosetPtr& x1, const PosetPtr& x2);

// Iterates f : Z -> Z from the least element until it stabilizes.
// Requires a least element.
int least_fixpoint(const MonotoneMap& f);

}  // namespace cbpv::order

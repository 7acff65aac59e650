#pragma once

#include <functional>

#include "cbpv/order/poset.hpp"

namespace cbpv::order {

// A strong Poset-monad. Strength is baked into the Kleisli extension:
// strong_extend turns f : W x X -> TY into a map W x TX -> TY. All
// products use the row-major pairing from poset.hpp.
struct Monad {
  std::string name;
  std::function<PosetPtr(const PosetPtr&)> apply_obj;
  std::function<MonotoneMap(const PosetPtr&)> unit;  // eta_X : X -> TX
  std::function<MonotoneMap(const PosetPtr& w, const PosetPtr& x,
                            const PosetPtr& y, const MonotoneMap& f)>
      strong_extend;
};

using MonadPtr = std::shared_ptr<const Monad>;

MonadPtr identity_monad();
MonadPtr lift_monad();      // adds a fresh bottom at index X.size
MonadPtr downset_monad();   // down-closed subsets as bitmasks, numeric order
// X x Sigma with Sigma the free monoid on {a, b} truncated at the length
// cap, discrete. Deliberately not lax idempotent.
MonadPtr writer_monad(int length_cap = 3);

// T on morphisms: extend(eta . f) with trivial strength.
MonotoneMap monad_map(const MonadPtr& m, const MonotoneMap& f);
// Plain extension (W = 1): f : X -> TY gives TX -> TY.
MonotoneMap monad_extend(const MonadPtr& m, const PosetPtr& y,
                         const MonotoneMap& f);

// Downset element encoding: the down-closed bitmasks of x in increasing
// numeric order (bit i set = element i present).
std::vector<std::uint32_t> downset_masks(const PosetPtr& x);

// Writer monoid encoding: all words over {a, b} of length <= cap, sorted
// by length then lexicographically; index 0 is the empty word.
std::vector<std::string> writer_words(int length_cap);

}  // namespace cbpv::order

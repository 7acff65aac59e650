#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbpv::order {

struct SizeBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Global cap on carrier sizes; constructions throw SizeBudgetExceeded
// instead of building something larger.
int size_budget();
void set_size_budget(int budget);

// An explicit finite poset: elements 0..size-1 with a reflexive,
// antisymmetric, transitive order matrix (validated on construction).
class FinitePoset {
 public:
  FinitePoset(int size, std::vector<bool> leq,
              std::vector<std::string> labels = {});

  int size() const { return size_; }
  bool le(int a, int b) const { return leq_[a * size_ + b]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> least() const;          // global minimum, if any
  std::optional<int> join(int a, int b) const;  // least upper bound, if any

  // Textual order-matrix dump for debugging.
  std::string dump() const;

  bool same_order(const FinitePoset& other) const;

 private:
  int size_;
  std::vector<bool> leq_;
  std::vector<std::string> labels_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

PosetPtr terminal_poset();
PosetPtr discrete(int n);
PosetPtr chain(int n);
// The coproduct 1+1: a discrete 2-element poset, index 0 = inl (tt),
// index 1 = inr (ff).
PosetPtr two();

// A map between posets as an element table, monotone by construction
// (validated).
class MonotoneMap {
 public:
  MonotoneMap(PosetPtr dom, PosetPtr cod, std::vector<int> table);

  const PosetPtr& dom() const { return dom_; }
  const PosetPtr& cod() const { return cod_; }
  int operator()(int x) const { return table_[x]; }
  const std::vector<int>& table() const { return table_; }

  bool operator==(const MonotoneMap& other) const {
    return table_ == other.table_;
  }
  // Pointwise order in the codomain (requires equal domains/codomains).
  bool leq(const MonotoneMap& other) const;

 private:
  PosetPtr dom_, cod_;
  std::vector<int> table_;
};

MonotoneMap id_map(PosetPtr p);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);  // g . f
MonotoneMap constant_map(PosetPtr dom, PosetPtr cod, int value);
MonotoneMap terminal_map(PosetPtr dom);  // !_X : X -> 1

// Binary product with row-major element order: (a, b) -> a*|Q| + b.
PosetPtr product(const PosetPtr& p, const PosetPtr& q);
inline int pair_index(const PosetPtr& q, int a, int b) {
  return a * q->size() + b;
}
inline int fst_index(const PosetPtr& q, int ab) { return ab / q->size(); }
inline int snd_index(const PosetPtr& q, int ab) { return ab % q->size(); }

MonotoneMap proj1_map(const PosetPtr& p, const PosetPtr& q);
MonotoneMap proj2_map(const PosetPtr& p, const PosetPtr& q);
MonotoneMap pair_map(const MonotoneMap& f, const MonotoneMap& g);  // <f, g>
// f x g : P1 x P2 -> Q1 x Q2
MonotoneMap product_map(const MonotoneMap& f, const MonotoneMap& g);
// (X1 x X2) x X3 -> X1 x (X2 x X3)
MonotoneMap assoc_map(const PosetPtr& x1, const PosetPtr& x2,
                      const PosetPtr& x3);
MonotoneMap assoc_inv_map(const PosetPtr& x1, const PosetPtr& x2,
                          const PosetPtr& x3);
// beta : (X1 x X2) x X3 -> (X1 x X3) x X2
MonotoneMap beta_map(const PosetPtr& x1, const PosetPtr& x2,
                     const PosetPtr& x3);
MonotoneMap swap_map(const PosetPtr& p, const PosetPtr& q);

// Binary coproduct: p's elements first (0..|p|-1), then q's, ordered
// within each summand only.
PosetPtr coproduct(const PosetPtr& p, const PosetPtr& q);
MonotoneMap inl_map(const PosetPtr& p, const PosetPtr& q);
MonotoneMap inr_map(const PosetPtr& p, const PosetPtr& q);
MonotoneMap copair_map(const MonotoneMap& f, const MonotoneMap& g);  // [f, g]
// dist_W : W x 2 -> W + W, inverse of [<id, inl . !>, <id, inr . !>].
MonotoneMap dist_map(const PosetPtr& w);
MonotoneMap inl_two();  // 1 -> 2
MonotoneMap inr_two();

// The exponential q^p: elements are exactly the monotone maps p -> q in
// lexicographic table order, ordered pointwise.
class Exp {
 public:
  Exp(PosetPtr base, PosetPtr target);

  const PosetPtr& poset() const { return poset_; }
  const PosetPtr& base() const { return base_; }      // p
  const PosetPtr& target() const { return target_; }  // q
  const std::vector<int>& table_of(int i) const { return tables_[i]; }
  int index_of(const std::vector<int>& table) const;

  // curry(f : W x P -> Q) : W -> Q^P
  MonotoneMap curry(const MonotoneMap& f, const PosetPtr& w) const;
  // uncurry(g : W -> Q^P) : W x P -> Q
  MonotoneMap uncurry(const MonotoneMap& g) const;
  // ev : Q^P x P -> Q
  MonotoneMap ev() const;
  // Q^P action on maps: (pre : P' -> P, post : Q -> Q') lifts to
  // Q^P -> Q'^P' sending h to post . h . pre.
  MonotoneMap hom_map(const Exp& result, const MonotoneMap& pre,
                      const MonotoneMap& post) const;

 private:
  PosetPtr base_, target_, poset_;
  std::vector<std::vector<int>> tables_;
  std::map<std::vector<int>, int> index_;
};

// All monotone maps p -> q as tables in lexicographic order.
std::vector<std::vector<int>> enumerate_monotone_tables(const FinitePoset& p,
                                                        const FinitePoset& q);

// if-distribution: given w in W and b in 2, picks f(w) or g(w).
MonotoneMap case_on_two(const MonotoneMap& f, const MonotoneMap& g,
                        const MonotoneMap& cond);

}  // namespace cbpv::order

#include "cbpv/order/poset.hpp"

#include <algorithm>
#include <atomic>

namespace cbpv::order {

namespace {
std::atomic<int> g_budget{4096};

void check_budget(long long n, const char* what) {
  if (n > g_budget.load())
    throw SizeBudgetExceeded(std::string(what) + " carrier of size " +
                             std::to_string(n) + " exceeds budget " +
                             std::to_string(g_budget.load()));
}
}  // namespace

int size_budget() { return g_budget.load(); }
void set_size_budget(int budget) { g_budget.store(budget); }

FinitePoset::FinitePoset(int size, std::vector<bool> leq,
                         std::vector<std::string> labels)
    : size_(size), leq_(std::move(leq)), labels_(std::move(labels)) {
  if (size_ <= 0 || leq_.size() != static_cast<size_t>(size_) * size_)
    throw std::invalid_argument("bad order matrix size");
  check_budget(size_, "poset");
  if (labels_.empty()) {
    labels_.reserve(size_);
    for (int i = 0; i < size_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  for (int a = 0; a < size_; ++a) {
    if (!le(a, a)) throw std::invalid_argument("order not reflexive");
    for (int b = 0; b < size_; ++b) {
      if (a != b && le(a, b) && le(b, a))
        throw std::invalid_argument("order not antisymmetric");
      for (int c = 0; c < size_; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw std::invalid_argument("order not transitive");
    }
  }
}

std::optional<int> FinitePoset::least() const {
  for (int a = 0; a < size_; ++a) {
    bool ok = true;
    for (int b = 0; b < size_ && ok; ++b) ok = le(a, b);
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::join(int a, int b) const {
  std::optional<int> best;
  for (int c = 0; c < size_; ++c) {
    if (!le(a, c) || !le(b, c)) continue;
    if (!best || le(c, *best)) best = c;
  }
  if (!best) return std::nullopt;
  // verify it is below every upper bound
  for (int c = 0; c < size_; ++c)
    if (le(a, c) && le(b, c) && !le(*best, c)) return std::nullopt;
  return best;
}

std::string FinitePoset::dump() const {
  std::string out = "poset size=" + std::to_string(size_) + "\n";
  for (int a = 0; a < size_; ++a) {
    out += labels_[a] + ": ";
    for (int b = 0; b < size_; ++b) out += le(a, b) ? '1' : '0';
    out += '\n';
  }
  return out;
}

bool FinitePoset::same_order(const FinitePoset& other) const {
  return size_ == other.size_ && leq_ == other.leq_;
}

PosetPtr terminal_poset() {
  static const PosetPtr p =
      std::make_shared<FinitePoset>(1, std::vector<bool>{true},
                                    std::vector<std::string>{"*"});
  return p;
}

PosetPtr discrete(int n) {
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (int i = 0; i < n; ++i) leq[i * n + i] = true;
  return std::make_shared<FinitePoset>(n, std::move(leq));
}

PosetPtr chain(int n) {
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i * n + j] = true;
  return std::make_shared<FinitePoset>(n, std::move(leq));
}

PosetPtr two() {
  static const PosetPtr p = std::make_shared<FinitePoset>(
      2, std::vector<bool>{true, false, false, true},
      std::vector<std::string>{"tt", "ff"});
  return p;
}

MonotoneMap::MonotoneMap(PosetPtr dom, PosetPtr cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != static_cast<size_t>(dom_->size()))
    throw std::invalid_argument("map table size mismatch");
  for (int x : table_)
    if (x < 0 || x >= cod_->size())
      throw std::invalid_argument("map table out of range");
  for (int a = 0; a < dom_->size(); ++a)
    for (int b = 0; b < dom_->size(); ++b)
      if (dom_->le(a, b) && !cod_->le(table_[a], table_[b]))
        throw std::invalid_argument("map not monotone");
}

bool MonotoneMap::leq(const MonotoneMap& other) const {
  if (table_.size() != other.table_.size())
    throw std::invalid_argument("comparing maps with different domains");
  for (size_t i = 0; i < table_.size(); ++i)
    if (!cod_->le(table_[i], other.table_[i])) return false;
  return true;
}

MonotoneMap id_map(PosetPtr p) {
  std::vector<int> t(p->size());
  for (int i = 0; i < p->size(); ++i) t[i] = i;
  return MonotoneMap(p, p, std::move(t));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod()->size() != g.dom()->size())
    throw std::invalid_argument("composition size mismatch");
  std::vector<int> t(f.dom()->size());
  for (int i = 0; i < f.dom()->size(); ++i) t[i] = g(f(i));
  return MonotoneMap(f.dom(), g.cod(), std::move(t));
}

MonotoneMap constant_map(PosetPtr dom, PosetPtr cod, int value) {
  std::vector<int> t(dom->size(), value);
  return MonotoneMap(std::move(dom), std::move(cod), std::move(t));
}

MonotoneMap terminal_map(PosetPtr dom) {
  std::vector<int> t(dom->size(), 0);
  return MonotoneMap(std::move(dom), terminal_poset(), std::move(t));
}

PosetPtr product(const PosetPtr& p, const PosetPtr& q) {
  long long n = static_cast<long long>(p->size()) * q->size();
  check_budget(n, "product");
  int np = p->size(), nq = q->size();
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  std::vector<std::string> labels(n);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) {
      labels[a * nq + b] = "(" + p->label(a) + "," + q->label(b) + ")";
      for (int c = 0; c < np; ++c)
        for (int d = 0; d < nq; ++d)
          if (p->le(a, c) && q->le(b, d))
            leq[static_cast<size_t>(a * nq + b) * n + (c * nq + d)] = true;
    }
  return std::make_shared<FinitePoset>(static_cast<int>(n), std::move(leq),
                                       std::move(labels));
}

MonotoneMap proj1_map(const PosetPtr& p, const PosetPtr& q) {
  PosetPtr pq = product(p, q);
  std::vector<int> t(pq->size());
  for (int i = 0; i < pq->size(); ++i) t[i] = fst_index(q, i);
  return MonotoneMap(pq, p, std::move(t));
}

MonotoneMap proj2_map(const PosetPtr& p, const PosetPtr& q) {
  PosetPtr pq = product(p, q);
  std::vector<int> t(pq->size());
  for (int i = 0; i < pq->size(); ++i) t[i] = snd_index(q, i);
  return MonotoneMap(pq, q, std::move(t));
}

MonotoneMap pair_map(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.dom()->size() != g.dom()->size())
    throw std::invalid_argument("pairing maps with different domains");
  PosetPtr cod = product(f.cod(), g.cod());
  std::vector<int> t(f.dom()->size());
  for (int i = 0; i < f.dom()->size(); ++i)
    t[i] = pair_index(g.cod(), f(i), g(i));
  return MonotoneMap(f.dom(), cod, std::move(t));
}

MonotoneMap product_map(const MonotoneMap& f, const MonotoneMap& g) {
  PosetPtr dom = product(f.dom(), g.dom());
  PosetPtr cod = product(f.cod(), g.cod());
  std::vector<int> t(dom->size());
  for (int i = 0; i < dom->size(); ++i)
    t[i] = pair_index(g.cod(), f(fst_index(g.dom(), i)),
                      g(snd_index(g.dom(), i)));
  return MonotoneMap(dom, cod, std::move(t));
}

MonotoneMap assoc_map(const PosetPtr& x1, const PosetPtr& x2,
                      const PosetPtr& x3) {
  PosetPtr x12 = product(x1, x2);
  PosetPtr x23 = product(x2, x3);
  PosetPtr dom = product(x12, x3);
  PosetPtr cod = product(x1, x23);
  std::vector<int> t(dom->size());
  for (int i = 0; i < dom->size(); ++i) {
    int ab = fst_index(x3, i), c = snd_index(x3, i);
    int a = fst_index(x2, ab), b = snd_index(x2, ab);
    t[i] = pair_index(x23, a, pair_index(x3, b, c));
  }
  return MonotoneMap(dom, cod, std::move(t));
}

MonotoneMap assoc_inv_map(const PosetPtr& x1, const PosetPtr& x2,
                          const PosetPtr& x3) {
  PosetPtr x12 = product(x1, x2);
  PosetPtr x23 = product(x2, x3);
  PosetPtr dom = product(x1, x23);
  PosetPtr cod = product(x12, x3);
  std::vector<int> t(dom->size());
  for (int i = 0; i < dom->size(); ++i) {
    int a = fst_index(x23, i), bc = snd_index(x23, i);
    int b = fst_index(x3, bc), c = snd_index(x3, bc);
    t[i] = pair_index(x3, pair_index(x2, a, b), c);
  }
  return MonotoneMap(dom, cod, std::move(t));
}

MonotoneMap beta_map(const PosetPtr& x1, const PosetPtr& x2,
                     const PosetPtr& x3) {
  PosetPtr x12 = product(x1, x2);
  PosetPtr x13 = product(x1, x3);
  PosetPtr dom = product(x12, x3);
  PosetPtr cod = product(x13, x2);
  std::vector<int> t(dom->size());
  for (int i = 0; i < dom->size(); ++i) {
    int ab = fst_index(x3, i), c = snd_index(x3, i);
    int a = fst_index(x2, ab), b = snd_index(x2, ab);
    t[i] = pair_index(x2, pair_index(x3, a, c), b);
  }
  return MonotoneMap(dom, cod, std::move(t));
}

MonotoneMap swap_map(const PosetPtr& p, const PosetPtr& q) {
  PosetPtr dom = product(p, q);
  PosetPtr cod = product(q, p);
  std::vector<int> t(dom->size());
  for (int i = 0; i < dom->size(); ++i)
    t[i] = pair_index(p, snd_index(q, i), fst_index(q, i));
  return MonotoneMap(dom, cod, std::move(t));
}

PosetPtr coproduct(const PosetPtr& p, const PosetPtr& q) {
  long long n = static_cast<long long>(p->size()) + q->size();
  check_budget(n, "coproduct");
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  std::vector<std::string> labels(n);
  for (int a = 0; a < p->size(); ++a) {
    labels[a] = "inl " + p->label(a);
    for (int b = 0; b < p->size(); ++b)
      leq[static_cast<size_t>(a) * n + b] = p->le(a, b);
  }
  for (int a = 0; a < q->size(); ++a) {
    labels[p->size() + a] = "inr " + q->label(a);
    for (int b = 0; b < q->size(); ++b)
      leq[static_cast<size_t>(p->size() + a) * n + (p->size() + b)] =
          q->le(a, b);
  }
  return std::make_shared<FinitePoset>(static_cast<int>(n), std::move(leq),
                                       std::move(labels));
}

MonotoneMap inl_map(const PosetPtr& p, const PosetPtr& q) {
  std::vector<int> t(p->size());
  for (int i = 0; i < p->size(); ++i) t[i] = i;
  return MonotoneMap(p, coproduct(p, q), std::move(t));
}

MonotoneMap inr_map(const PosetPtr& p, const PosetPtr& q) {
  std::vector<int> t(q->size());
  for (int i = 0; i < q->size(); ++i) t[i] = p->size() + i;
  return MonotoneMap(q, coproduct(p, q), std::move(t));
}

MonotoneMap copair_map(const MonotoneMap& f, const MonotoneMap& g) {
  PosetPtr dom = coproduct(f.dom(), g.dom());
  std::vector<int> t(dom->size());
  for (int i = 0; i < f.dom()->size(); ++i) t[i] = f(i);
  for (int i = 0; i < g.dom()->size(); ++i) t[f.dom()->size() + i] = g(i);
  return MonotoneMap(dom, f.cod(), std::move(t));
}

MonotoneMap dist_map(const PosetPtr& w) {
  PosetPtr dom = product(w, two());
  PosetPtr cod = coproduct(w, w);
  std::vector<int> t(dom->size());
  for (int i = 0; i < dom->size(); ++i) {
    int a = fst_index(two(), i), b = snd_index(two(), i);
    t[i] = b == 0 ? a : w->size() + a;
  }
  return MonotoneMap(dom, cod, std::move(t));
}

MonotoneMap inl_two() { return constant_map(terminal_poset(), two(), 0); }
MonotoneMap inr_two() { return constant_map(terminal_poset(), two(), 1); }

std::vector<std::vector<int>> enumerate_monotone_tables(const FinitePoset& p,
                                                        const FinitePoset& q) {
  std::vector<std::vector<int>> out;
  std::vector<int> table(p.size(), -1);
  // Backtracking in table-lexicographic order.
  std::function<void(int)> go = [&](int pos) {
    if (pos == p.size()) {
      out.push_back(table);
      return;
    }
    for (int v = 0; v < q.size(); ++v) {
      bool ok = true;
      for (int prev = 0; prev < pos && ok; ++prev) {
        if (p.le(prev, pos) && !q.le(table[prev], v)) ok = false;
        if (p.le(pos, prev) && !q.le(v, table[prev])) ok = false;
      }
      if (!ok) continue;
      table[pos] = v;
      go(pos + 1);
      table[pos] = -1;
    }
  };
  go(0);
  return out;
}

Exp::Exp(PosetPtr base, PosetPtr target)
    : base_(std::move(base)), target_(std::move(target)) {
  tables_ = enumerate_monotone_tables(*base_, *target_);
  long long n = static_cast<long long>(tables_.size());
  check_budget(n, "exponential");
  for (int i = 0; i < n; ++i) index_[tables_[i]] = i;
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "[";
    for (size_t k = 0; k < tables_[i].size(); ++k) {
      if (k) l += ' ';
      l += target_->label(tables_[i][k]);
    }
    labels[i] = l + "]";
    for (int j = 0; j < n; ++j) {
      bool le_ij = true;
      for (int x = 0; x < base_->size() && le_ij; ++x)
        le_ij = target_->le(tables_[i][x], tables_[j][x]);
      if (le_ij) leq[static_cast<size_t>(i) * n + j] = true;
    }
  }
  poset_ = std::make_shared<FinitePoset>(static_cast<int>(n), std::move(leq),
                                         std::move(labels));
}

int Exp::index_of(const std::vector<int>& table) const {
  auto it = index_.find(table);
  if (it == index_.end())
    throw std::invalid_argument("table is not a monotone map into this exponential");
  return it->second;
}

MonotoneMap Exp::curry(const MonotoneMap& f, const PosetPtr& w) const {
  // f : W x P -> Q with row-major pairing over P.
  if (f.dom()->size() != w->size() * base_->size())
    throw std::invalid_argument("curry domain mismatch");
  std::vector<int> t(w->size());
  for (int i = 0; i < w->size(); ++i) {
    std::vector<int> table(base_->size());
    for (int x = 0; x < base_->size(); ++x)
      table[x] = f(pair_index(base_, i, x));
    t[i] = index_of(table);
  }
  return MonotoneMap(w, poset_, std::move(t));
}

MonotoneMap Exp::uncurry(const MonotoneMap& g) const {
  PosetPtr dom = product(g.dom(), base_);
  std::vector<int> t(dom->size());
  for (int i = 0; i < dom->size(); ++i) {
    int wi = fst_index(base_, i), x = snd_index(base_, i);
    t[i] = tables_[g(wi)][x];
  }
  return MonotoneMap(dom, target_, std::move(t));
}

MonotoneMap Exp::ev() const { return uncurry(id_map(poset_)); }

MonotoneMap Exp::hom_map(const Exp& result, const MonotoneMap& pre,
                         const MonotoneMap& post) const {
  // pre : result.base -> base, post : target -> result.target
  std::vector<int> t(poset_->size());
  for (int i = 0; i < poset_->size(); ++i) {
    std::vector<int> table(result.base()->size());
    for (int x = 0; x < result.base()->size(); ++x)
      table[x] = post(tables_[i][pre(x)]);
    t[i] = result.index_of(table);
  }
  return MonotoneMap(poset_, result.poset(), std::move(t));
}

MonotoneMap case_on_two(const MonotoneMap& f, const MonotoneMap& g,
                        const MonotoneMap& cond) {
  // cond : W -> 2 (discrete), f, g : W -> Z; picks f on tt, g on ff.
  std::vector<int> t(f.dom()->size());
  for (int i = 0; i < f.dom()->size(); ++i) t[i] = cond(i) == 0 ? f(i) : g(i);
  return MonotoneMap(f.dom(), f.cod(), std::move(t));
}

}  // namespace cbpv::order

#include "cbpv/order/monad.hpp"

#include <algorithm>
#include <map>

namespace cbpv::order {

namespace {

// product(terminal, X) has the same order matrix and element indices as X,
// so maps can be re-domained between the two for free.
MonotoneMap redomain(const MonotoneMap& f, const PosetPtr& dom) {
  return MonotoneMap(dom, f.cod(), f.table());
}

}  // namespace

MonotoneMap monad_extend(const MonadPtr& m, const PosetPtr& y,
                         const MonotoneMap& f) {
  const PosetPtr& x = f.dom();
  MonotoneMap f1 = redomain(f, product(terminal_poset(), x));
  MonotoneMap e = m->strong_extend(terminal_poset(), x, y, f1);
  return redomain(e, m->apply_obj(x));
}

MonotoneMap monad_map(const MonadPtr& m, const MonotoneMap& f) {
  return monad_extend(m, f.cod(), compose(m->unit(f.cod()), f));
}

MonadPtr identity_monad() {
  auto m = std::make_shared<Monad>();
  m->name = "id";
  m->apply_obj = [](const PosetPtr& x) { return x; };
  m->unit = [](const PosetPtr& x) { return id_map(x); };
  m->strong_extend = [](const PosetPtr&, const PosetPtr&, const PosetPtr&,
                        const MonotoneMap& f) { return f; };
  return m;
}

namespace {

PosetPtr lift_poset(const PosetPtr& x) {
  int n = x->size();
  std::vector<bool> leq(static_cast<size_t>(n + 1) * (n + 1), false);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(x->label(a));
    for (int b = 0; b < n; ++b)
      leq[static_cast<size_t>(a) * (n + 1) + b] = x->le(a, b);
  }
  labels.push_back("_|_");
  for (int b = 0; b <= n; ++b)
    leq[static_cast<size_t>(n) * (n + 1) + b] = true;
  return std::make_shared<FinitePoset>(n + 1, std::move(leq),
                                       std::move(labels));
}

}  // namespace

MonadPtr lift_monad() {
  auto m = std::make_shared<Monad>();
  m->name = "lift";
  m->apply_obj = [](const PosetPtr& x) { return lift_poset(x); };
  m->unit = [](const PosetPtr& x) {
    std::vector<int> t(x->size());
    for (int i = 0; i < x->size(); ++i) t[i] = i;
    return MonotoneMap(x, lift_poset(x), std::move(t));
  };
  m->strong_extend = [mp = m.get()](const PosetPtr& w, const PosetPtr& x,
                                    const PosetPtr& y, const MonotoneMap& f) {
    PosetPtr tx = mp->apply_obj(x);
    PosetPtr ty = mp->apply_obj(y);
    PosetPtr dom = product(w, tx);
    std::vector<int> t(dom->size());
    for (int i = 0; i < dom->size(); ++i) {
      int wi = fst_index(tx, i), xi = snd_index(tx, i);
      t[i] = xi == x->size() ? y->size() : f(pair_index(x, wi, xi));
    }
    return MonotoneMap(dom, ty, std::move(t));
  };
  return m;
}

std::vector<std::uint32_t> downset_masks(const PosetPtr& x) {
  int n = x->size();
  if (n > 20)
    throw SizeBudgetExceeded("downset over carrier of size " +
                             std::to_string(n));
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool closed = true;
    for (int b = 0; b < n && closed; ++b) {
      if (!(s >> b & 1)) continue;
      for (int a = 0; a < n && closed; ++a)
        if (x->le(a, b) && !(s >> a & 1)) closed = false;
    }
    if (closed) masks.push_back(s);
  }
  return masks;
}

namespace {

PosetPtr downset_poset(const PosetPtr& x) {
  auto masks = downset_masks(x);
  int n = static_cast<int>(masks.size());
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "{";
    bool first = true;
    for (int b = 0; b < x->size(); ++b)
      if (masks[i] >> b & 1) {
        if (!first) l += ',';
        l += x->label(b);
        first = false;
      }
    labels[i] = l + "}";
    for (int j = 0; j < n; ++j)
      if ((masks[i] & masks[j]) == masks[i])
        leq[static_cast<size_t>(i) * n + j] = true;
  }
  return std::make_shared<FinitePoset>(n, std::move(leq), std::move(labels));
}

int mask_index(const std::vector<std::uint32_t>& masks, std::uint32_t s) {
  auto it = std::lower_bound(masks.begin(), masks.end(), s);
  if (it == masks.end() || *it != s)
    throw std::logic_error("mask is not down-closed");
  return static_cast<int>(it - masks.begin());
}

}  // namespace

MonadPtr downset_monad() {
  auto m = std::make_shared<Monad>();
  m->name = "downset";
  m->apply_obj = [](const PosetPtr& x) { return downset_poset(x); };
  m->unit = [](const PosetPtr& x) {
    auto masks = downset_masks(x);
    std::vector<int> t(x->size());
    for (int i = 0; i < x->size(); ++i) {
      std::uint32_t principal = 0;
      for (int a = 0; a < x->size(); ++a)
        if (x->le(a, i)) principal |= 1u << a;
      t[i] = mask_index(masks, principal);
    }
    return MonotoneMap(x, downset_poset(x), std::move(t));
  };
  m->strong_extend = [](const PosetPtr& w, const PosetPtr& x,
                        const PosetPtr& y, const MonotoneMap& f) {
    auto xmasks = downset_masks(x);
    auto ymasks = downset_masks(y);
    PosetPtr tx = downset_poset(x);
    PosetPtr ty = downset_poset(y);
    PosetPtr dom = product(w, tx);
    std::vector<int> t(dom->size());
    for (int i = 0; i < dom->size(); ++i) {
      int wi = fst_index(tx, i);
      std::uint32_t s = xmasks[snd_index(tx, i)];
      std::uint32_t out = 0;
      for (int b = 0; b < x->size(); ++b)
        if (s >> b & 1) out |= ymasks[f(pair_index(x, wi, b))];
      t[i] = mask_index(ymasks, out);
    }
    return MonotoneMap(dom, ty, std::move(t));
  };
  return m;
}

std::vector<std::string> writer_words(int length_cap) {
  std::vector<std::string> words{""};
  for (size_t i = 0; i < words.size(); ++i) {
    if (static_cast<int>(words[i].size()) == length_cap) continue;
    words.push_back(words[i] + 'a');
    words.push_back(words[i] + 'b');
  }
  std::sort(words.begin(), words.end(), [](const auto& u, const auto& v) {
    return u.size() != v.size() ? u.size() < v.size() : u < v;
  });
  return words;
}

MonadPtr writer_monad(int length_cap) {
  auto words = writer_words(length_cap);
  std::map<std::string, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  auto sigma_labels = words;
  for (auto& l : sigma_labels)
    if (l.empty()) l = "e";
  auto sigma = [n = static_cast<int>(words.size()), sigma_labels]() {
    std::vector<bool> leq(static_cast<size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = true;
    return std::make_shared<FinitePoset>(n, std::move(leq), sigma_labels);
  }();
  auto mul = [words, index, length_cap](int s1, int s2) {
    std::string w = words[s1] + words[s2];
    if (static_cast<int>(w.size()) > length_cap) w.resize(length_cap);
    return index.at(w);
  };

  auto m = std::make_shared<Monad>();
  m->name = "writer";
  m->apply_obj = [sigma](const PosetPtr& x) { return product(x, sigma); };
  m->unit = [sigma](const PosetPtr& x) {
    std::vector<int> t(x->size());
    for (int i = 0; i < x->size(); ++i) t[i] = pair_index(sigma, i, 0);
    return MonotoneMap(x, product(x, sigma), std::move(t));
  };
  m->strong_extend = [sigma, mul](const PosetPtr& w, const PosetPtr& x,
                                  const PosetPtr& y, const MonotoneMap& f) {
    PosetPtr tx = product(x, sigma);
    PosetPtr ty = product(y, sigma);
    PosetPtr dom = product(w, tx);
    std::vector<int> t(dom->size());
    for (int i = 0; i < dom->size(); ++i) {
      int wi = fst_index(tx, i), xs = snd_index(tx, i);
      int xi = fst_index(sigma, xs), s = snd_index(sigma, xs);
      int out = f(pair_index(x, wi, xi));
      int yi = fst_index(sigma, out), s2 = snd_index(sigma, out);
      t[i] = pair_index(sigma, yi, mul(s, s2));
    }
    return MonotoneMap(dom, ty, std::move(t));
  };
  return m;
}

}  // namespace cbpv::order

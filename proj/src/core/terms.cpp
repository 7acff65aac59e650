#include "cbpv/core/terms.hpp"

#include <atomic>

namespace cbpv {

namespace {
using VK = ValueTerm::Kind;
using CK = CompTerm::Kind;

ValuePtr mkv(ValueTerm t) {
  return std::make_shared<const ValueTerm>(std::move(t));
}
CompPtr mkc(CompTerm t) { return std::make_shared<const CompTerm>(std::move(t)); }
}  // namespace

ValuePtr v_var(std::string name) {
  ValueTerm t;
  t.kind = VK::Var;
  t.var = std::move(name);
  return mkv(std::move(t));
}

ValuePtr v_unit() {
  static const ValuePtr t = mkv(ValueTerm{VK::Unit});
  return t;
}

ValuePtr v_pair(ValuePtr a, ValuePtr b) {
  ValueTerm t;
  t.kind = VK::Pair;
  t.fst = std::move(a);
  t.snd = std::move(b);
  return mkv(std::move(t));
}

ValuePtr v_true() {
  static const ValuePtr t = mkv(ValueTerm{VK::True});
  return t;
}

ValuePtr v_false() {
  static const ValuePtr t = mkv(ValueTerm{VK::False});
  return t;
}

ValuePtr v_thunk(CompPtr m) {
  ValueTerm t;
  t.kind = VK::Thunk;
  t.comp = std::move(m);
  return mkv(std::move(t));
}

CompPtr c_cpair(CompPtr a, CompPtr b) {
  CompTerm t;
  t.kind = CK::CompPair;
  t.m1 = std::move(a);
  t.m2 = std::move(b);
  return mkc(std::move(t));
}

CompPtr c_proj(int index, CompPtr m) {
  CompTerm t;
  t.kind = CK::Proj;
  t.index = index;
  t.m1 = std::move(m);
  return mkc(std::move(t));
}

CompPtr c_lam(std::string x, ValueTypePtr a, CompPtr body) {
  CompTerm t;
  t.kind = CK::Lam;
  t.var = std::move(x);
  t.vtype = std::move(a);
  t.m1 = std::move(body);
  return mkc(std::move(t));
}

CompPtr c_push(ValuePtr v, CompPtr m) {
  CompTerm t;
  t.kind = CK::Push;
  t.val = std::move(v);
  t.m1 = std::move(m);
  return mkc(std::move(t));
}

CompPtr c_return(ValuePtr v) {
  CompTerm t;
  t.kind = CK::Return;
  t.val = std::move(v);
  return mkc(std::move(t));
}

CompPtr c_to(CompPtr m, std::string x, CompPtr n) {
  CompTerm t;
  t.kind = CK::To;
  t.m1 = std::move(m);
  t.var = std::move(x);
  t.m2 = std::move(n);
  return mkc(std::move(t));
}

CompPtr c_match(ValuePtr v, std::string x1, std::string x2, CompPtr m) {
  CompTerm t;
  t.kind = CK::MatchPair;
  t.val = std::move(v);
  t.var = std::move(x1);
  t.var2 = std::move(x2);
  t.m1 = std::move(m);
  return mkc(std::move(t));
}

CompPtr c_if(ValuePtr v, CompPtr then_m, CompPtr else_m) {
  CompTerm t;
  t.kind = CK::If;
  t.val = std::move(v);
  t.m1 = std::move(then_m);
  t.m2 = std::move(else_m);
  return mkc(std::move(t));
}

CompPtr c_force(ValuePtr v) {
  CompTerm t;
  t.kind = CK::Force;
  t.val = std::move(v);
  return mkc(std::move(t));
}

CompPtr c_rec(std::string x, CompTypePtr c, CompPtr body) {
  CompTerm t;
  t.kind = CK::Rec;
  t.var = std::move(x);
  t.ctype = std::move(c);
  t.m1 = std::move(body);
  return mkc(std::move(t));
}

CompPtr c_fail(CompTypePtr c) {
  CompTerm t;
  t.kind = CK::Fail;
  t.ctype = std::move(c);
  return mkc(std::move(t));
}

CompPtr c_or(CompPtr a, CompPtr b) {
  CompTerm t;
  t.kind = CK::Or;
  t.m1 = std::move(a);
  t.m2 = std::move(b);
  return mkc(std::move(t));
}

bool equal(const ValuePtr& a, const ValuePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case VK::Var:
      return a->var == b->var;
    case VK::Unit:
    case VK::True:
    case VK::False:
      return true;
    case VK::Pair:
      return equal(a->fst, b->fst) && equal(a->snd, b->snd);
    case VK::Thunk:
      return equal(a->comp, b->comp);
  }
  return false;
}

bool equal(const CompPtr& a, const CompPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case CK::CompPair:
    case CK::Or:
      return equal(a->m1, b->m1) && equal(a->m2, b->m2);
    case CK::Proj:
      return a->index == b->index && equal(a->m1, b->m1);
    case CK::Lam:
      return a->var == b->var && equal(a->vtype, b->vtype) &&
             equal(a->m1, b->m1);
    case CK::Push:
      return equal(a->val, b->val) && equal(a->m1, b->m1);
    case CK::Return:
    case CK::Force:
      return equal(a->val, b->val);
    case CK::To:
      return a->var == b->var && equal(a->m1, b->m1) && equal(a->m2, b->m2);
    case CK::MatchPair:
      return a->var == b->var && a->var2 == b->var2 && equal(a->val, b->val) &&
             equal(a->m1, b->m1);
    case CK::If:
      return equal(a->val, b->val) && equal(a->m1, b->m1) && equal(a->m2, b->m2);
    case CK::Rec:
      return a->var == b->var && equal(a->ctype, b->ctype) &&
             equal(a->m1, b->m1);
    case CK::Fail:
      return equal(a->ctype, b->ctype);
  }
  return false;
}

bool is_terminal(const CompPtr& m) {
  return m->kind == CK::CompPair || m->kind == CK::Lam || m->kind == CK::Return;
}

namespace {
void collect_free(const ValuePtr& v, std::set<std::string>& bound,
                  std::set<std::string>& out);
void collect_free(const CompPtr& m, std::set<std::string>& bound,
                  std::set<std::string>& out);

// RAII scope for a binder
struct Bind {
  std::set<std::string>& bound;
  std::string name;
  bool added;
  Bind(std::set<std::string>& b, const std::string& n)
      : bound(b), name(n), added(b.insert(n).second) {}
  ~Bind() {
    if (added) bound.erase(name);
  }
};

void collect_free(const ValuePtr& v, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (v->kind) {
    case VK::Var:
      if (!bound.count(v->var)) out.insert(v->var);
      break;
    case VK::Pair:
      collect_free(v->fst, bound, out);
      collect_free(v->snd, bound, out);
      break;
    case VK::Thunk:
      collect_free(v->comp, bound, out);
      break;
    default:
      break;
  }
}

void collect_free(const CompPtr& m, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (m->kind) {
    case CK::CompPair:
    case CK::Or:
      collect_free(m->m1, bound, out);
      collect_free(m->m2, bound, out);
      break;
    case CK::Proj:
      collect_free(m->m1, bound, out);
      break;
    case CK::Lam: {
      Bind b(bound, m->var);
      collect_free(m->m1, bound, out);
      break;
    }
    case CK::Push:
      collect_free(m->val, bound, out);
      collect_free(m->m1, bound, out);
      break;
    case CK::Return:
    case CK::Force:
      collect_free(m->val, bound, out);
      break;
    case CK::To: {
      collect_free(m->m1, bound, out);
      Bind b(bound, m->var);
      collect_free(m->m2, bound, out);
      break;
    }
    case CK::MatchPair: {
      collect_free(m->val, bound, out);
      Bind b1(bound, m->var);
      Bind b2(bound, m->var2);
      collect_free(m->m1, bound, out);
      break;
    }
    case CK::If:
      collect_free(m->val, bound, out);
      collect_free(m->m1, bound, out);
      collect_free(m->m2, bound, out);
      break;
    case CK::Rec: {
      Bind b(bound, m->var);
      collect_free(m->m1, bound, out);
      break;
    }
    case CK::Fail:
      break;
  }
}
}  // namespace

std::set<std::string> free_vars(const ValuePtr& v) {
  std::set<std::string> bound, out;
  collect_free(v, bound, out);
  return out;
}

std::set<std::string> free_vars(const CompPtr& m) {
  std::set<std::string> bound, out;
  collect_free(m, bound, out);
  return out;
}

namespace {
std::atomic<unsigned long long> g_fresh_counter{0};
}

std::string fresh_name(const std::string& base) {
  std::string stem = base.substr(0, base.find('#'));
  if (stem.empty()) stem = "v";
  return stem + "#" + std::to_string(++g_fresh_counter);
}

void reset_fresh_counter() { g_fresh_counter = 0; }

namespace {

// True if substituting with s under binder x would capture, or x is itself
// substituted away (we rename in both cases to keep the traversal simple).
bool needs_rename(const std::string& x, const Subst& s,
                  const std::set<std::string>& body_free) {
  for (const auto& [from, to] : s) {
    if (from == x) continue;
    if (!body_free.count(from)) continue;
    if (free_vars(to).count(x)) return true;
  }
  return false;
}

Subst drop(const Subst& s, std::initializer_list<std::string> names) {
  Subst out = s;
  for (const auto& n : names) out.erase(n);
  return out;
}

}  // namespace

ValuePtr substitute(const ValuePtr& v, const Subst& s) {
  if (s.empty()) return v;
  switch (v->kind) {
    case VK::Var: {
      auto it = s.find(v->var);
      return it == s.end() ? v : it->second;
    }
    case VK::Unit:
    case VK::True:
    case VK::False:
      return v;
    case VK::Pair:
      return v_pair(substitute(v->fst, s), substitute(v->snd, s));
    case VK::Thunk:
      return v_thunk(substitute(v->comp, s));
  }
  return v;
}

CompPtr substitute(const CompPtr& m, const Subst& s) {
  if (s.empty()) return m;
  switch (m->kind) {
    case CK::CompPair:
      return c_cpair(substitute(m->m1, s), substitute(m->m2, s));
    case CK::Or:
      return c_or(substitute(m->m1, s), substitute(m->m2, s));
    case CK::Proj:
      return c_proj(m->index, substitute(m->m1, s));
    case CK::Lam: {
      Subst inner = drop(s, {m->var});
      auto body_free = free_vars(m->m1);
      if (needs_rename(m->var, inner, body_free)) {
        std::string x2 = fresh_name(m->var);
        inner[m->var] = v_var(x2);
        return c_lam(x2, m->vtype, substitute(m->m1, inner));
      }
      return c_lam(m->var, m->vtype, substitute(m->m1, inner));
    }
    case CK::Push:
      return c_push(substitute(m->val, s), substitute(m->m1, s));
    case CK::Return:
      return c_return(substitute(m->val, s));
    case CK::Force:
      return c_force(substitute(m->val, s));
    case CK::To: {
      CompPtr m1 = substitute(m->m1, s);
      Subst inner = drop(s, {m->var});
      auto body_free = free_vars(m->m2);
      if (needs_rename(m->var, inner, body_free)) {
        std::string x2 = fresh_name(m->var);
        inner[m->var] = v_var(x2);
        return c_to(m1, x2, substitute(m->m2, inner));
      }
      return c_to(m1, m->var, substitute(m->m2, inner));
    }
    case CK::MatchPair: {
      ValuePtr v = substitute(m->val, s);
      Subst inner = drop(s, {m->var, m->var2});
      auto body_free = free_vars(m->m1);
      std::string x1 = m->var, x2 = m->var2;
      if (needs_rename(x1, inner, body_free)) {
        x1 = fresh_name(m->var);
        inner[m->var] = v_var(x1);
      }
      if (needs_rename(x2, inner, body_free)) {
        x2 = fresh_name(m->var2);
        inner[m->var2] = v_var(x2);
      }
      return c_match(v, x1, x2, substitute(m->m1, inner));
    }
    case CK::If:
      return c_if(substitute(m->val, s), substitute(m->m1, s),
                  substitute(m->m2, s));
    case CK::Rec: {
      Subst inner = drop(s, {m->var});
      auto body_free = free_vars(m->m1);
      if (needs_rename(m->var, inner, body_free)) {
        std::string x2 = fresh_name(m->var);
        inner[m->var] = v_var(x2);
        return c_rec(x2, m->ctype, substitute(m->m1, inner));
      }
      return c_rec(m->var, m->ctype, substitute(m->m1, inner));
    }
    case CK::Fail:
      return m;
  }
  return m;
}

}  // namespace cbpv

#include "cbpv/eval/eval.hpp"

namespace cbpv::eval {

namespace {
using CK = CompTerm::Kind;

void add_terminal(EvalOutcome& out, const CompPtr& r) {
  for (const auto& t : out.terminals)
    if (equal(t, r)) return;
  out.terminals.push_back(r);
}

void merge(EvalOutcome& out, const EvalOutcome& in) {
  for (const auto& t : in.terminals) add_terminal(out, t);
  out.exhausted = out.exhausted || in.exhausted;
}

EvalOutcome go(const CompPtr& m, std::int64_t fuel) {
  EvalOutcome out;
  if (fuel <= 0) {
    out.exhausted = true;
    return out;
  }
  const std::int64_t f = fuel - 1;  // this rule application
  switch (m->kind) {
    case CK::CompPair:
    case CK::Lam:
    case CK::Return:
      add_terminal(out, m);
      return out;
    case CK::Proj: {
      EvalOutcome sub = go(m->m1, f);
      out.exhausted = sub.exhausted;
      for (const auto& r : sub.terminals) {
        // well-typedness guarantees r is a computation pair
        merge(out, go(m->index == 1 ? r->m1 : r->m2, f));
      }
      return out;
    }
    case CK::Push: {
      EvalOutcome sub = go(m->m1, f);
      out.exhausted = sub.exhausted;
      for (const auto& r : sub.terminals)
        merge(out, go(substitute(r->m1, {{r->var, m->val}}), f));
      return out;
    }
    case CK::To: {
      EvalOutcome sub = go(m->m1, f);
      out.exhausted = sub.exhausted;
      for (const auto& r : sub.terminals)
        merge(out, go(substitute(m->m2, {{m->var, r->val}}), f));
      return out;
    }
    case CK::MatchPair: {
      const ValuePtr& v = m->val;  // closed, so a literal pair
      return go(substitute(m->m1, {{m->var, v->fst}, {m->var2, v->snd}}), f);
    }
    case CK::If:
      return go(m->val->kind == ValueTerm::Kind::True ? m->m1 : m->m2, f);
    case CK::Force:
      return go(m->val->comp, f);
    case CK::Rec:
      return go(substitute(m->m1, {{m->var, v_thunk(m)}}), f);
    case CK::Fail:
      return out;  // no derivation, but not fuel exhaustion
    case CK::Or: {
      merge(out, go(m->m1, f));
      merge(out, go(m->m2, f));
      return out;
    }
  }
  return out;
}
}  // namespace

EvalOutcome eval(const CompPtr& m, std::int64_t fuel) {
  if (fuel < 1) throw IllTyped("fuel must be positive");
  return go(m, fuel);
}

bool Results::contains(const ValuePtr& v) const {
  for (const auto& w : values)
    if (equal(w, v)) return true;
  return false;
}

Results results(const CompPtr& m, std::int64_t fuel) {
  EvalOutcome out = eval(m, fuel);
  Results rs;
  rs.exhausted = out.exhausted;
  for (const auto& t : out.terminals) {
    if (t->kind != CK::Return)
      throw IllTyped("non-return terminal from a returner-typed program");
    if (!rs.contains(t->val)) rs.values.push_back(t->val);
  }
  return rs;
}

Results results_checked(const CompPtr& m, std::int64_t fuel,
                        EffectSignature sig) {
  CompTypePtr c = check_comp(TypingContext{}, m, sig);
  if (c->kind != CompType::Kind::Free)
    throw IllTyped("program must have returner type, got " + show(c));
  return results(m, fuel);
}

RelateReport relate_programs(const CompPtr& m, const CompPtr& m2,
                             ProgramRelation rel, std::int64_t fuel,
                             EffectSignature sig) {
  auto expect_free_bool = [&](const CompPtr& p) {
    CompTypePtr c = check_comp(TypingContext{}, p, sig);
    if (c->kind != CompType::Kind::Free ||
        c->arg->kind != ValueType::Kind::Bool)
      throw IllTyped("program relation requires type (F bool), got " + show(c));
  };
  expect_free_bool(m);
  expect_free_bool(m2);

  RelateReport rep;
  rep.left = results(m, fuel);
  rep.right = results(m2, fuel);

  if (rel == ProgramRelation::ResultEq) {
    for (const auto& v : rep.left.values)
      if (rep.right.contains(v)) {
        rep.verdict = Verdict::Pass;
        return rep;
      }
    rep.verdict = (rep.left.exhausted || rep.right.exhausted)
                      ? Verdict::Inconclusive
                      : Verdict::Fail;
    return rep;
  }

  // ResultImpl
  for (const auto& v : rep.left.values) {
    if (!rep.right.contains(v)) {
      rep.witness = v;
      rep.verdict =
          rep.right.exhausted ? Verdict::Inconclusive : Verdict::Fail;
      return rep;
    }
  }
  rep.verdict = Verdict::Pass;
  return rep;
}

}  // namespace cbpv::eval

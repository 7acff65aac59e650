#include "cbpv/core/types.hpp"

namespace cbpv {

ValueTypePtr vt_unit() {
  static const auto t =
      std::make_shared<const ValueType>(ValueType{ValueType::Kind::Unit});
  return t;
}

ValueTypePtr vt_bool() {
  static const auto t =
      std::make_shared<const ValueType>(ValueType{ValueType::Kind::Bool});
  return t;
}

ValueTypePtr vt_prod(ValueTypePtr a, ValueTypePtr b) {
  return std::make_shared<const ValueType>(
      ValueType{ValueType::Kind::Prod, std::move(a), std::move(b), nullptr});
}

ValueTypePtr vt_thunk(CompTypePtr c) {
  return std::make_shared<const ValueType>(
      ValueType{ValueType::Kind::Thunk, nullptr, nullptr, std::move(c)});
}

CompTypePtr ct_cprod(CompTypePtr c, CompTypePtr d) {
  return std::make_shared<const CompType>(CompType{
      CompType::Kind::CompProd, std::move(c), std::move(d), nullptr, nullptr});
}

CompTypePtr ct_arrow(ValueTypePtr a, CompTypePtr c) {
  return std::make_shared<const CompType>(CompType{
      CompType::Kind::Arrow, nullptr, nullptr, std::move(a), std::move(c)});
}

CompTypePtr ct_free(ValueTypePtr a) {
  return std::make_shared<const CompType>(CompType{
      CompType::Kind::Free, nullptr, nullptr, std::move(a), nullptr});
}

bool equal(const ValueTypePtr& a, const ValueTypePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case ValueType::Kind::Unit:
    case ValueType::Kind::Bool:
      return true;
    case ValueType::Kind::Prod:
      return equal(a->fst, b->fst) && equal(a->snd, b->snd);
    case ValueType::Kind::Thunk:
      return equal(a->comp, b->comp);
  }
  return false;
}

bool equal(const CompTypePtr& a, const CompTypePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case CompType::Kind::CompProd:
      return equal(a->cfst, b->cfst) && equal(a->csnd, b->csnd);
    case CompType::Kind::Arrow:
      return equal(a->arg, b->arg) && equal(a->body, b->body);
    case CompType::Kind::Free:
      return equal(a->arg, b->arg);
  }
  return false;
}

std::string show(const ValueTypePtr& a) {
  switch (a->kind) {
    case ValueType::Kind::Unit:
      return "unit";
    case ValueType::Kind::Bool:
      return "bool";
    case ValueType::Kind::Prod:
      return "(* " + show(a->fst) + " " + show(a->snd) + ")";
    case ValueType::Kind::Thunk:
      return "(U " + show(a->comp) + ")";
  }
  return "?";
}

std::string show(const CompTypePtr& c) {
  switch (c->kind) {
    case CompType::Kind::CompProd:
      return "(& " + show(c->cfst) + " " + show(c->csnd) + ")";
    case CompType::Kind::Arrow:
      return "(-> " + show(c->arg) + " " + show(c->body) + ")";
    case CompType::Kind::Free:
      return "(F " + show(c->arg) + ")";
  }
  return "?";
}

}  // namespace cbpv

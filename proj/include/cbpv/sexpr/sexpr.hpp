#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbpv/core/terms.hpp"
#include "cbpv/source/ast.hpp"

namespace cbpv::sexpr {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generic s-expression node.
struct Node {
  bool is_atom = false;
  std::string atom;
  std::vector<Node> items;
};

Node read(const std::string& text);  // exactly one expression
std::string write(const Node& n);

// Concrete syntax, round-tripping exactly with the printers in show().
//
//   value types   bool | unit | (* A B) | (U C)
//   comp types    (F A) | (-> A C) | (& C D)
//   values        x | unit | true | false | (pair V W) | (thunk M)
//   computations  (return V) | (to M x N) | (lam x A M) | (push V M)
//                 (force V) | (if V M N) | (cpair M N) | (proj1 M) | (proj2 M)
//                 (match V x1 x2 M) | (rec x C M) | (fail C) | (or M N)
//
// The source language mirrors this with an `s` prefix on keywords:
//   types  sbool | sunit | (sprod t t') | (sarrow t t')
//   exprs  x | sunit-val | strue | sfalse | (spair e e') | (sfst e) | (ssnd e)
//          (sif e0 e1 e2) | (slam x t e) | (sapp e e') |
//          (srecfun f t t' x e) | (sfail t) | (sor e e')
ValueTypePtr parse_value_type(const std::string& text);
CompTypePtr parse_comp_type(const std::string& text);
ValuePtr parse_value(const std::string& text);
CompPtr parse_comp(const std::string& text);
src::SrcTypePtr parse_src_type(const std::string& text);
src::SrcExprPtr parse_src_expr(const std::string& text);

ValueTypePtr value_type_of(const Node& n);
CompTypePtr comp_type_of(const Node& n);
ValuePtr value_of(const Node& n);
CompPtr comp_of(const Node& n);
src::SrcTypePtr src_type_of(const Node& n);
src::SrcExprPtr src_expr_of(const Node& n);

}  // namespace cbpv::sexpr

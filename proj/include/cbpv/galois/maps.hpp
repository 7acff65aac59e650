#pragma once

#include "cbpv/core/terms.hpp"
#include "cbpv/source/ast.hpp"

namespace cbpv::galois {

enum class MapDirection { ToName, ToValue };

// Type-indexed syntactic maps between the call-by-value and call-by-name
// translations. Typing contracts (for G |-c terms):
//   to_name(t, M)     : F(cbv_type t)  ->  cbn_type t
//   to_name_hat(t, V) : cbv_type t     ->  cbn_type t   (V a value)
//   to_value(t, N)    : cbn_type t     ->  F(cbv_type t)
// Fresh auxiliary variables come from the deterministic counter.
CompPtr to_name(const src::SrcTypePtr& t, const CompPtr& m);
CompPtr to_name_hat(const src::SrcTypePtr& t, const ValuePtr& v);
CompPtr to_value(const src::SrcTypePtr& t, const CompPtr& n);

// Substitution sending each x_i : t_i of G to thunk(to_name_hat(t_i, x_i)).
// Applying it moves a term typed in cbn_ctx(G) into cbv_ctx(G).
Subst ctx_thunk_subst(const src::SrcContext& ctx);

// to_value(t, cbn_translate(e)[ctx_thunk_subst(G)]): the comparison term
// with the same typing as cbv_translate(e).
CompPtr rhs_term(const src::SrcContext& ctx, const src::SrcExprPtr& e,
                 const src::SrcTypePtr& t);

}  // namespace cbpv::galois

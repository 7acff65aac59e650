#pragma once

#include "cbpv/core/terms.hpp"
#include "cbpv/source/ast.hpp"

namespace cbpv::src {

// Type translations. CBV sends source types to value types, CBN to
// computation types; contexts translate pointwise (CBN wraps in a thunk).
ValueTypePtr cbv_type(const SrcTypePtr& t);
CompTypePtr cbn_type(const SrcTypePtr& t);
TypingContext cbv_ctx(const SrcContext& ctx);
TypingContext cbn_ctx(const SrcContext& ctx);

// Expression translations. If G |- e : t then
//   cbv_ctx(G) |-c cbv_translate(e) : F(cbv_type(t))
//   cbn_ctx(G) |-c cbn_translate(e) : cbn_type(t)
// rtl_translate types like cbv_translate but evaluates pairs right-to-left.
// Auxiliary variables come from the deterministic fresh-name counter.
CompPtr cbv_translate(const SrcExprPtr& e);
CompPtr cbn_translate(const SrcExprPtr& e);
CompPtr rtl_translate(const SrcExprPtr& e);

}  // namespace cbpv::src

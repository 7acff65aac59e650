#pragma once

#include "cbpv/core/check.hpp"
#include "cbpv/order/algebra.hpp"
#include "cbpv/source/translate.hpp"

namespace cbpv::den {

using order::AlgebraPtr;
using order::MonadPtr;
using order::MonotoneMap;
using order::PosetPtr;

struct EffectUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A model fixes the monad and which effect constructs the interpretation
// accepts. Rec additionally needs least elements and Or finite joins in
// every carrier it touches; interpretation throws if one is missing.
struct Model {
  std::string name;
  MonadPtr monad;
  bool supports_rec = false;
  bool supports_nondet = false;
};

using ModelPtr = std::shared_ptr<const Model>;

ModelPtr identity_model();
ModelPtr lift_model();
ModelPtr downset_model();
ModelPtr writer_model();
ModelPtr model_by_name(const std::string& name);  // id | lift | downset | writer
ModelPtr model_for(EffectSignature sig);
EffectSignature signature_of(const ModelPtr& model);

PosetPtr interp_vtype(const ValueTypePtr& a, const ModelPtr& model);
AlgebraPtr interp_ctype(const CompTypePtr& c, const ModelPtr& model);
// Left-nested products starting from the terminal poset.
PosetPtr interp_ctx(const TypingContext& ctx, const ModelPtr& model);

// interp_value(G |-v V : A) : [[G]] -> [[A]]
// interp_comp(G |-c M : C)  : [[G]] -> carrier of [[C]]
MonotoneMap interp_value(const TypingContext& ctx, const ValuePtr& v,
                         const ModelPtr& model);
MonotoneMap interp_comp(const TypingContext& ctx, const CompPtr& m,
                        const ModelPtr& model);

// Semantic counterparts of the syntactic maps, per source type t. Writing
// Vt for the cbv interpretation and Nt for the cbn carrier:
//   tonamehat_sem(t) : Vt  -> Nt
//   phi(t)           : TVt -> Nt      (= algebra extension of tonamehat)
//   psi(t)           : Nt  -> TVt
MonotoneMap tonamehat_sem(const src::SrcTypePtr& t, const ModelPtr& model);
MonotoneMap phi(const src::SrcTypePtr& t, const ModelPtr& model);
MonotoneMap psi(const src::SrcTypePtr& t, const ModelPtr& model);

// Context versions: tonamehat_ctx(G) : VG -> NG pointwise, and
// tovalue_ctx(G) : NG -> T VG via left-to-right sequencing.
MonotoneMap tonamehat_ctx(const src::SrcContext& ctx, const ModelPtr& model);
MonotoneMap tovalue_ctx(const src::SrcContext& ctx, const ModelPtr& model);

}  // namespace cbpv::den

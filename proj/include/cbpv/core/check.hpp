#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cbpv/core/terms.hpp"
#include "cbpv/core/types.hpp"

namespace cbpv {

// Ordered typing context; no identifier may appear twice.
class TypingContext {
 public:
  TypingContext() = default;
  explicit TypingContext(
      std::vector<std::pair<std::string, ValueTypePtr>> entries);

  // Extends with a fresh binding. Throws TypeError on duplicates.
  TypingContext extended(const std::string& name, ValueTypePtr type) const;

  const ValueTypePtr* lookup(const std::string& name) const;
  const std::vector<std::pair<std::string, ValueTypePtr>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, ValueTypePtr>> entries_;
};

struct TypeError : std::runtime_error {
  enum class Code { UnboundVariable, TypeMismatch, EffectNotAllowed, BadContext };
  Code code;
  std::string path;  // path into the term, for diagnostics

  TypeError(Code c, std::string message, std::string where = "")
      : std::runtime_error(where.empty() ? message : where + ": " + message),
        code(c),
        path(std::move(where)) {}
};

// Syntax-directed typing. Both return the unique type or throw TypeError.
ValueTypePtr check_value(const TypingContext& ctx, const ValuePtr& v,
                         EffectSignature sig = EffectSignature::Pure);
CompTypePtr check_comp(const TypingContext& ctx, const CompPtr& m,
                       EffectSignature sig = EffectSignature::Pure);

}  // namespace cbpv

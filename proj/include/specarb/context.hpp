#pragma once

#include <memory>
#include <string>
#include <vector>

#include "specarb/errors.hpp"

namespace specarb {

/// An ordered list of distinct variable names.  Polynomials refer to
/// variables by index into their context; the declaration order fixes the
/// monomial order (earlier variables rank higher).  Contexts are immutable
/// and shared by pointer.
class VariableContext {
  public:
    static constexpr std::size_t kMaxVars = 20;

    static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a variable by name, or -1 when absent.
    int index_of(const std::string& name) const;

    friend bool operator==(const VariableContext& a, const VariableContext& b) {
        return a.names_ == b.names_;
    }

  private:
    explicit VariableContext(std::vector<std::string> names);
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

/// The three contexts the library keeps coming back to.
ContextPtr ctx_x8();     // {x1..x8}
ContextPtr ctx_tau8();   // {tau0..tau7}
ContextPtr ctx_mixed();  // {x1..x8, tau0..tau7}

/// True when two polynomials may interoperate: same object or equal names.
inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace specarb

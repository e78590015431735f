#include "specarb/context.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace specarb {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names) {
    if (names.size() > kMaxVars) {
        throw std::logic_error("variable context limited to " + std::to_string(kMaxVars) +
                               " names");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::logic_error("empty variable name");
        if (!seen.insert(n).second) throw std::logic_error("duplicate variable name: " + n);
    }
    return std::shared_ptr<const VariableContext>(new VariableContext(std::move(names)));
}

int VariableContext::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return -1;
    return static_cast<int>(it - names_.begin());
}

namespace {

ContextPtr make_x8() {
    return VariableContext::make({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"});
}

ContextPtr make_tau8() {
    return VariableContext::make(
        {"tau0", "tau1", "tau2", "tau3", "tau4", "tau5", "tau6", "tau7"});
}

ContextPtr make_mixed() {
    return VariableContext::make({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "tau0", "tau1",
                                  "tau2", "tau3", "tau4", "tau5", "tau6", "tau7"});
}

}  // namespace

ContextPtr ctx_x8() {
    static ContextPtr ctx = make_x8();
    return ctx;
}

ContextPtr ctx_tau8() {
    static ContextPtr ctx = make_tau8();
    return ctx;
}

ContextPtr ctx_mixed() {
    static ContextPtr ctx = make_mixed();
    return ctx;
}

}  // namespace specarb

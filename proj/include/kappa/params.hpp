#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kappa {

using ParamId = uint32_t;

// Process-global interner for deformation-parameter names. Ids are assigned
// in declaration order and never reused; the monomial order (and with it every
// canonical form) is graded-lex over this id order. Built-ins are registered
// before anything else so their ids are stable across runs.
class Params {
public:
    static ParamId id(const std::string& name);       // declare or look up
    static ParamId lookup(const std::string& name);   // throws if undeclared
    static bool known(const std::string& name);
    static ParamId fresh(const std::string& prefix);  // prefix1, prefix2, ...
    static const std::string& name(ParamId id);
    static size_t count();

    static const ParamId kappa, kappa_hat, kappa_tilde, c, m, lambda, mu;
};

// Ordered list of parameters a definition file (or solver run) works over.
// Thin facade over the global interner; order is fixed at creation.
class ParamSet {
public:
    static ParamSet builtins();

    ParamId declare(const std::string& name);  // must be fresh in this set
    bool contains(ParamId id) const;
    const std::vector<ParamId>& order() const { return order_; }

private:
    std::vector<ParamId> order_;
};

} // namespace kappa

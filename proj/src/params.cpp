#include "kappa/params.hpp"

#include "kappa/error.hpp"

#include <map>
#include <mutex>

namespace kappa {

namespace {

struct Registry {
    std::mutex mu;
    std::vector<std::string> names;
    std::map<std::string, ParamId> index;
    std::map<std::string, int> fresh_counters;

    Registry() {
        for (const char* n : {"kappa", "kappa_hat", "kappa_tilde", "c", "m", "lambda", "mu"}) {
            index.emplace(n, (ParamId)names.size());
            names.emplace_back(n);
        }
    }
};

Registry& reg() {
    static Registry r;
    return r;
}

} // namespace

ParamId Params::id(const std::string& name) {
    auto& r = reg();
    std::lock_guard<std::mutex> lk(r.mu);
    auto it = r.index.find(name);
    if (it != r.index.end()) return it->second;
    ParamId id = (ParamId)r.names.size();
    r.names.push_back(name);
    r.index.emplace(name, id);
    return id;
}

ParamId Params::lookup(const std::string& name) {
    auto& r = reg();
    std::lock_guard<std::mutex> lk(r.mu);
    auto it = r.index.find(name);
    if (it == r.index.end()) throw error(errc::unknown_parameter, "unknown parameter: " + name);
    return it->second;
}

bool Params::known(const std::string& name) {
    auto& r = reg();
    std::lock_guard<std::mutex> lk(r.mu);
    return r.index.count(name) > 0;
}

ParamId Params::fresh(const std::string& prefix) {
    auto& r = reg();
    std::lock_guard<std::mutex> lk(r.mu);
    for (;;) {
        int n = ++r.fresh_counters[prefix];
        std::string name = prefix + std::to_string(n);
        if (!r.index.count(name)) {
            ParamId id = (ParamId)r.names.size();
            r.names.push_back(name);
            r.index.emplace(name, id);
            return id;
        }
    }
}

const std::string& Params::name(ParamId id) {
    auto& r = reg();
    std::lock_guard<std::mutex> lk(r.mu);
    return r.names.at(id);
}

size_t Params::count() {
    auto& r = reg();
    std::lock_guard<std::mutex> lk(r.mu);
    return r.names.size();
}

const ParamId Params::kappa = 0;
const ParamId Params::kappa_hat = 1;
const ParamId Params::kappa_tilde = 2;
const ParamId Params::c = 3;
const ParamId Params::m = 4;
const ParamId Params::lambda = 5;
const ParamId Params::mu = 6;

ParamSet ParamSet::builtins() {
    ParamSet s;
    s.order_ = {Params::kappa, Params::kappa_hat, Params::kappa_tilde,
                Params::c, Params::m, Params::lambda, Params::mu};
    return s;
}

ParamId ParamSet::declare(const std::string& name) {
    ParamId id = Params::id(name);
    for (ParamId p : order_)
        if (p == id) throw error(errc::validation, "parameter already declared: " + name);
    order_.push_back(id);
    return id;
}

bool ParamSet::contains(ParamId id) const {
    for (ParamId p : order_)
        if (p == id) return true;
    return false;
}

} // namespace kappa

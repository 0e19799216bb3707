#pragma once

#include "kappa/ncalg.hpp"

#include <cstdint>

namespace kappa {

// One entry of a verification suite. pass <=> residual identically zero;
// residual_text carries the exact nonzero residual in canonical text form.
struct CheckEntry {
    std::string id;
    std::string subjects;
    bool pass = true;
    std::string residual_text;
    std::string remark;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckEntry> entries;

    bool all_pass() const {
        for (auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    void add(std::string id, std::string subjects, bool pass,
             std::string residual = "", std::string remark = "") {
        entries.push_back({std::move(id), std::move(subjects), pass, std::move(residual), std::move(remark)});
    }
    void merge(const CheckReport& o) {
        entries.insert(entries.end(), o.entries.begin(), o.entries.end());
    }
    size_t failures() const {
        size_t n = 0;
        for (auto& e : entries) n += !e.pass;
        return n;
    }
};

// Hopf algebra presentation: generators with swap relations plus coproduct,
// counit, antipode tables on the ordinary generators. Group-like generators
// are handled structurally (Delta F = F (x) F, eps F = 1, S F = F^-1) and
// never appear in the tables.
struct HopfPresentation {
    std::string name;
    Algebra alg;
    std::map<GenId, TensorElem> coproduct;
    std::map<GenId, Scalar> counit;
    std::map<GenId, NcPoly> antipode;

    const TensorElem& cop(GenId g) const;
    const NcPoly& anti(GenId g) const;
    Scalar eps(GenId g) const;
};

// Validated construction; table keys are generator names. Missing coproduct
// entries default to primitive, missing counits to zero. Antipodes are
// mandatory for every ordinary generator.
HopfPresentation build_hopf(std::string name,
                            std::vector<Generator> gens,
                            std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets,
                            std::map<std::string, TensorElem> coproducts,
                            std::map<std::string, Scalar> counits,
                            std::map<std::string, NcPoly> antipodes);

// Homomorphic / anti-homomorphic extensions to arbitrary elements.
TensorElem coproduct_of(const HopfPresentation& H, const NcPoly& p);
NcPoly antipode_of(const HopfPresentation& H, const NcPoly& p);
Scalar counit_of(const HopfPresentation& H, const NcPoly& p);

// Coproduct of a single generator power (F^k -> F^k (x) F^k).
TensorElem coproduct_factor(const HopfPresentation& H, const Factor& f);

// (Delta (x) id) and (id (x) Delta) on rank-2 tensors; results are rank 3.
TensorElem coassoc_left(const HopfPresentation& H, const TensorElem& t);
TensorElem coassoc_right(const HopfPresentation& H, const TensorElem& t);

// Jacobi identity residuals over all generator triples.
CheckReport check_jacobi(const HopfPresentation& H);

// Hopf axioms on all generators and seeded random products up to max_degree:
// (i) Delta is an algebra map, (ii) coassociativity, (iii) counit axiom,
// (iv) antipode axiom.
CheckReport check_hopf_axioms(const HopfPresentation& H, uint32_t max_degree, uint64_t seed = 1);

// [candidate, g] = 0 for every generator g, reported per generator.
CheckReport centrality_check(const NcPoly& candidate, const HopfPresentation& H);

// Presentation-wide parameter substitution (e.g. kappa -> kappa_hat * c).
HopfPresentation substitute_params(const HopfPresentation& H, const std::map<ParamId, Scalar>& bindings,
                                   std::string new_name);

// Rename generators (used when deriving one registry algebra from another).
HopfPresentation rename_generators(const HopfPresentation& H, const std::map<std::string, std::string>& names,
                                   std::string new_name);

// Registry of the built-in presentations.
const HopfPresentation& registry_get(const std::string& name);
std::vector<std::string> registry_names();

} // namespace kappa

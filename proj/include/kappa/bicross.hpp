#pragma once

#include "kappa/hopf.hpp"

namespace kappa {

// Mixed tensor: every slot carries words of a (possibly different) algebra.
// Used for coactions (A (x) H), dual cocycles (A (x) A) and the intermediate
// objects of the axiom checks.
struct MTensor {
    std::vector<const Algebra*> slots;
    std::map<std::vector<Word>, Scalar> terms;

    MTensor() = default;
    explicit MTensor(std::vector<const Algebra*> s) : slots(std::move(s)) {}

    void add(const std::vector<Word>& ws, const Scalar& c);
    MTensor operator+(const MTensor& o) const;
    MTensor operator-(const MTensor& o) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const MTensor& o) const { return terms == o.terms; }
    std::string to_string() const;
};

// (H, A, action, coaction, cocycle, dual cocycle) package. H acts on A from
// the right; A coacts on H from the left. Missing action entries on a
// generator pair mean the bracket-style default is NOT assumed: action tables
// must be complete unless alpha_trivial is set. The cocycle and dual cocycle
// default to their trivial values.
struct BicrossData {
    HopfPresentation H;
    HopfPresentation A;
    bool alpha_trivial = false;
    std::map<std::pair<GenId, GenId>, NcPoly> action;     // (A gen, H gen) -> NcPoly in A
    std::map<GenId, MTensor> coaction;                    // H gen -> A (x) H
    std::map<std::pair<GenId, GenId>, NcPoly> cocycle;    // (H gen, H gen) -> NcPoly in A, antisymmetric
    std::map<GenId, MTensor> dual_cocycle;                // H gen -> A (x) A

    bool xi_trivial() const { return cocycle.empty(); }
    bool psi_trivial() const { return dual_cocycle.empty(); }
};

struct ComparisonReport {
    std::string lhs, rhs;
    CheckReport checks;
    bool pass() const { return checks.all_pass(); }
};

// Right action of an H word on an A element, extended by the module axioms
// (iterated over H letters, distributed over A letters through Delta_H).
NcPoly act_right(const BicrossData& D, const NcPoly& a, const Word& h);

// Left coaction extended to H words (multiplicative when alpha is trivial,
// through the product-coaction rule otherwise).
MTensor coact(const BicrossData& D, const Word& h);

// Cocycle on a pair of H monomials: stored table on ordinary generator pairs,
// counit-style on everything else.
NcPoly cocycle_value(const BicrossData& D, const Word& h, const Word& g);

CheckReport check_module_algebra(const BicrossData& D);
CheckReport check_comodule_coalgebra(const BicrossData& D);
CheckReport check_compatibility(const BicrossData& D);

// Assembles the bicrossproduct Hopf algebra on the disjoint union of A's and
// H's generators. Runs the three axiom suites first and throws AxiomFailure
// if any fails.
HopfPresentation build_bicrossproduct(const BicrossData& D, const std::string& name);

// Structural comparison of two presentations under a generator bijection
// (names of P mapped to names of Q). Relations, coproducts, counits and
// antipodes are re-normalized on Q's side and compared exactly.
ComparisonReport compare_presentations(const HopfPresentation& P, const HopfPresentation& Q,
                                       const std::map<std::string, std::string>& gen_map);

} // namespace kappa

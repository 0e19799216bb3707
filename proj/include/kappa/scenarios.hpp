#pragma once

#include "kappa/bicross.hpp"

namespace kappa {
namespace scenarios {

// Lorentz algebra acting on the deformed translation Hopf algebra, with the
// boost coaction that reassembles the kappa-Poincare presentation.
BicrossData poincare_kappa_data();

// The deformed translation algebra itself as a semidirect coproduct of its
// spatial and timelike halves.
BicrossData trans_kappa_data();

// Rotations and Galilei boosts over the kappa_tilde-deformed translations.
BicrossData galilei_kappa_tilde_data();

// The extended presentation as a cocycle bicrossproduct: trivial action,
// exponential coaction, antisymmetric boost-momentum cocycle.
BicrossData poincare_ext_cocycle_data();

// kappa_tilde-deformed translation Hopf algebra in Galilean generator names.
const HopfPresentation& trans_kappa_tilde();

// Named invariant elements, hyperbolic functions encoded through the
// half-rate group-like carrier:
//   poincare-c1, poincare-c1-printed, poincare-c2, poincare-w0,
//   poincare-w1..w3, galilei-ext-c1, galilei-ext-c2, galilei-ext-c3,
//   galilei-tilde-c1, galilei-tilde-c2
NcPoly casimir(const std::string& name);
std::vector<std::string> casimir_names();

// The acceptance battery: every check the project promises, one entry per
// criterion, exact zero tolerances throughout.
struct Criterion {
    int number;
    std::string title;
    double budget_seconds;   // 0 = no stated budget
    CheckReport (*run)(uint64_t seed);
};
const std::vector<Criterion>& acceptance_criteria();

} // namespace scenarios
} // namespace kappa

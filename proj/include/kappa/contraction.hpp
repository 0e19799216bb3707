#pragma once

#include "kappa/bicross.hpp"
#include "kappa/spacetime.hpp"

namespace kappa {

// One generator rescaling: old = c^power * new.
struct GenScale {
    std::string new_name;
    int power = 0;
};

// Generator redefinitions plus parameter substitutions, with the limit taken
// in one named parameter. Generators absent from the map keep their name and
// scale trivially.
struct ContractionMap {
    std::map<std::string, GenScale> gens;
    std::map<ParamId, Scalar> params;
    ParamId limit_param = Params::c;
};

// Substitute, rescale and take the limit entry by entry. A divergent
// structure constant aborts with a diagnostic naming the entry.
HopfPresentation apply_contraction(const HopfPresentation& H, const ContractionMap& map,
                                   std::string new_name);

// Expand every group-like exponential, then send the deformation parameter to
// infinity. The expansion order is raised until two consecutive orders give
// the same limit. The result must be a classical presentation: primitive
// coproducts and Lie-type relations.
HopfPresentation classical_limit(const HopfPresentation& H, ParamId param, uint32_t order,
                                 std::string new_name);

// Contract a single element (e.g. a Casimir): substitute, multiply by the
// overall rescale, take the limit monomial by monomial. The result lives in
// the destination algebra (matched by the mapped generator names).
NcPoly contract_element(const Algebra& src, const NcPoly& e, const ContractionMap& map,
                        const Scalar& rescale, const Algebra& dst);

// Classical limit of an element: expand group-likes (with the same
// stabilization rule), limit the parameter, map names into dst.
NcPoly classical_limit_element(const Algebra& src, const NcPoly& e, ParamId param, uint32_t order,
                               const Algebra& dst);

// Commutative square of presentations: contraction along the top and bottom,
// classical limits down the sides. The two paths to the bottom-right corner
// are compared structurally; optional expected corners are compared too.
struct AlgebraSquare {
    const HopfPresentation* start = nullptr;
    ContractionMap horizontal;
    ParamId vertical_param = Params::kappa;
    uint32_t order = 2;
    const HopfPresentation* expect_right = nullptr;    // optional
    const HopfPresentation* expect_bottom = nullptr;   // optional (bottom-right)
};
CheckReport check_diagram(const AlgebraSquare& spec);

// Calculus-side contraction: coordinates and forms rescale by powers of the
// limit parameter, table entries substitute and take limits.
CommutatorTable contract_table(const CalculusProblem& src, const CommutatorTable& t,
                               const std::map<std::string, GenScale>& coord_map,
                               const std::map<std::string, GenScale>& form_map,
                               const std::map<ParamId, Scalar>& params, ParamId limit,
                               const CalculusProblem& dst);

// Parameter-at-infinity limit of a commutator table (entries are scalars).
CommutatorTable limit_table(const CommutatorTable& t, ParamId param);

} // namespace kappa

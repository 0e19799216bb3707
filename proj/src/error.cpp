#include "kappa/error.hpp"

namespace kappa {

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::unknown_parameter: return "UnknownParameter";
        case errc::non_terminating: return "NonTerminating";
        case errc::unknown_algebra: return "UnknownAlgebra";
        case errc::unknown_generator: return "UnknownGenerator";
        case errc::axiom_failure: return "AxiomFailure";
        case errc::divergent_structure_constant: return "DivergentStructureConstant";
        case errc::non_invertible_map: return "NonInvertibleMap";
        case errc::parse: return "ParseError";
        case errc::validation: return "ValidationError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace kappa

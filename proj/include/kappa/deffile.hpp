#pragma once

#include "kappa/contraction.hpp"
#include "kappa/scenarios.hpp"

#include <optional>

namespace kappa {

// Parsed definition file. The line-oriented grammar is documented in the
// project readme; every value is built and validated on load.
struct ParsedFile {
    enum class Kind { hopf, bicross, calculus, contraction, diagram };
    Kind kind;

    std::optional<HopfPresentation> hopf;
    std::optional<BicrossData> bicross;
    std::optional<CalculusProblem> calculus;
    CommutatorTable table;           // optional [table] section of a calculus file
    bool has_table = false;
    std::optional<ContractionMap> contraction;

    struct Diagram {
        std::string start;
        std::map<ParamId, Scalar> start_subst;
        ContractionMap horizontal;
        ParamId vertical_param;
        uint32_t order = 2;
        std::string expect_right, expect_bottom;
    };
    std::optional<Diagram> diagram;
};

ParsedFile parse_definition_file(const std::string& path);
ParsedFile parse_definition_text(const std::string& text, const std::string& origin);

// Rational expression in the declared parameters ("-(kappa/2)", "1/(2*m*c)").
Scalar parse_scalar_expr(const std::string& text);

} // namespace kappa

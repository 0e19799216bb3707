#pragma once

#include "kappa/scalar.hpp"

#include <cstddef>

namespace kappa {

// Sparse linear system over the exact scalar field.
struct LinSystem {
    size_t nvars = 0;
    struct Row {
        std::map<size_t, Scalar> coeff;
        Scalar rhs;                      // sum coeff * x = rhs
        std::string tag;                 // provenance for diagnostics
    };
    std::vector<Row> rows;

    void add_row(std::map<size_t, Scalar> coeff, Scalar rhs, std::string tag = "");
};

struct LinSolution {
    bool consistent = false;
    std::string offending;                       // tag of a failing row
    std::vector<Scalar> particular;              // one solution
    std::vector<std::vector<Scalar>> nullspace;  // basis of the homogeneous space
};

LinSolution solve_linear(const LinSystem& sys);

} // namespace kappa

#include "kappa/linsolve.hpp"

#include <algorithm>

namespace kappa {

void LinSystem::add_row(std::map<size_t, Scalar> coeff, Scalar rhs, std::string tag) {
    for (auto it = coeff.begin(); it != coeff.end();)
        it = it->second.is_zero() ? coeff.erase(it) : std::next(it);
    rows.push_back({std::move(coeff), std::move(rhs), std::move(tag)});
}

// Fraction-free-ish Gauss-Jordan: pivots are chosen by sparsity of the row
// and simplicity of the pivot entry to keep intermediate scalars small.
LinSolution solve_linear(const LinSystem& sys) {
    LinSolution out;
    std::vector<LinSystem::Row> rows = sys.rows;
    std::vector<std::pair<size_t, size_t>> pivots;   // (row index, column)
    std::vector<bool> used(rows.size(), false);

    auto complexity = [](const Scalar& s) {
        return s.num().term_count() + s.den().term_count();
    };

    for (size_t col = 0; col < sys.nvars; ++col) {
        size_t best = rows.size();
        size_t best_key = SIZE_MAX;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            auto it = rows[r].coeff.find(col);
            if (it == rows[r].coeff.end()) continue;
            size_t key = rows[r].coeff.size() * 1000 + complexity(it->second);
            if (key < best_key) {
                best_key = key;
                best = r;
            }
        }
        if (best == rows.size()) continue;
        used[best] = true;
        pivots.push_back({best, col});
        Scalar inv = Scalar(1) / rows[best].coeff.at(col);
        for (auto& [c, v] : rows[best].coeff) v *= inv;
        rows[best].rhs *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == best) continue;
            auto it = rows[r].coeff.find(col);
            if (it == rows[r].coeff.end()) continue;
            Scalar f = it->second;
            for (auto& [c, v] : rows[best].coeff) {
                auto jt = rows[r].coeff.find(c);
                if (jt == rows[r].coeff.end()) {
                    Scalar nv = -(f * v);
                    if (!nv.is_zero()) rows[r].coeff.emplace(c, nv);
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) rows[r].coeff.erase(jt);
                }
            }
            rows[r].rhs -= f * rows[best].rhs;
        }
    }

    for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r].coeff.empty() && !rows[r].rhs.is_zero()) {
            out.consistent = false;
            out.offending = rows[r].tag;
            return out;
        }

    out.consistent = true;
    out.particular.assign(sys.nvars, Scalar(0));
    std::vector<bool> is_pivot(sys.nvars, false);
    for (auto& [r, c] : pivots) {
        is_pivot[c] = true;
        out.particular[c] = rows[r].rhs;
    }
    for (size_t col = 0; col < sys.nvars; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Scalar> v(sys.nvars, Scalar(0));
        v[col] = Scalar(1);
        for (auto& [r, c] : pivots) {
            auto it = rows[r].coeff.find(col);
            if (it != rows[r].coeff.end()) v[c] = -it->second;
        }
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

} // namespace kappa

#pragma once

#include "kappa/hopf.hpp"
#include "kappa/linsolve.hpp"

namespace kappa {

// Letter of a free coordinate/form word: either a coordinate of the spacetime
// algebra or a basis one-form.
struct CFLetter {
    bool is_form;
    uint16_t id;   // coordinate GenId or form index
    auto operator<=>(const CFLetter&) const = default;
};
using CFWord = std::vector<CFLetter>;

// Element of the free algebra on coordinates and forms. Nothing is rewritten
// here: coordinate-form products stay as written, which is what lets unknown
// commutators be carried around symbolically.
class CFExpr {
public:
    CFExpr() = default;
    explicit CFExpr(const Scalar& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<CFWord, Scalar>& terms() const { return terms_; }
    void add(const CFWord& w, const Scalar& c);
    CFExpr operator+(const CFExpr& o) const;
    CFExpr operator-(const CFExpr& o) const;
    CFExpr scaled(const Scalar& c) const;
    CFExpr operator*(const CFExpr& o) const;   // free concatenation
    bool operator==(const CFExpr& o) const { return terms_ == o.terms_; }

private:
    std::map<CFWord, Scalar> terms_;
};

// One-form basis: one differential per coordinate plus optional extra
// invariant forms. The exterior-derivative map is the identity pairing
// dx_mu <-> x_mu; extra forms are closed.
struct FormBasis {
    std::vector<std::string> names;       // all forms, differentials first
    std::vector<int> differential;        // coordinate GenId -> form index
    std::vector<int> extras;              // indices of the non-differential forms

    size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
};

// Module-algebra action of a symmetry Hopf algebra on coordinates and forms.
// Entries are degree <= 1 expressions; actions on differentials are derived
// by formally differentiating the coordinate entries.
struct ActionModel {
    const HopfPresentation* sym = nullptr;
    std::vector<GenId> acting;                                   // ordinary generators with entries
    std::map<std::pair<GenId, GenId>, CFExpr> on_coord;          // (sym gen, coordinate)
    std::map<std::pair<GenId, uint16_t>, CFExpr> on_extra_form;  // (sym gen, form index)
};

struct CalculusProblem {
    std::string name;
    Algebra coords;       // coordinate algebra; relation table is the B tensor
    FormBasis forms;
    ActionModel model;
};

// Unknown commutator tensor: [x_mu, chi_a] = sum_b table[{mu,a,b}] chi_b.
using CommutatorTable = std::map<std::tuple<GenId, int, int>, Scalar>;

Scalar table_entry(const CommutatorTable& t, GenId mu, int a, int b);

enum class CalcClass { inconsistent, unique, family };

struct CalculusSolution {
    CalcClass cls = CalcClass::inconsistent;
    int family_dim = 0;
    CommutatorTable linear_table;    // covariance + Leibniz stage (may hold frees)
    CommutatorTable table;           // after the Jacobi stage
    std::vector<ParamId> free_params;
    std::string note;                // offending residual or branch remarks
    bool linear_unique = false;
};

// Left action of a symmetry element on a free coordinate/form word. Group-like
// factors act through their exponential series, truncated exactly (the
// exponent generators lower the coordinate degree).
CFExpr left_act(const CalculusProblem& prob, const NcPoly& h, const CFWord& w);

// Covariance + Leibniz rows for the unknown commutator tensor.
struct ConstraintSystem {
    LinSystem sys;
    std::map<std::tuple<GenId, int, int>, size_t> var_of;
    std::vector<std::tuple<GenId, int, int>> unknowns;
};
ConstraintSystem generate_constraints(const CalculusProblem& prob);

struct SolveOptions {
    // pins applied after classification: entry (coord, form, form) = value
    std::vector<std::pair<std::tuple<std::string, std::string, std::string>, Scalar>> gauge;
};

CalculusSolution solve_calculus(const CalculusProblem& prob, const SolveOptions& opts = {});

// Covariance / Leibniz / Jacobi residuals of an explicit commutator table.
CheckReport verify_candidate(const CalculusProblem& prob, const CommutatorTable& cand);

// Linear invertible change of coordinates and forms; returns the transformed
// problem and table, re-verified by the caller.
struct BasisChange {
    // new coordinate/form = sum of coefficients over the old ones
    std::map<std::string, std::map<std::string, Scalar>> coords;
    std::map<std::string, std::map<std::string, Scalar>> forms;
    std::vector<std::string> coord_order;   // names of the new coordinates
    std::vector<std::string> form_order;    // names of the new forms (differentials first)
    std::vector<int> new_differential;      // new coord index -> new form index
};
std::pair<CalculusProblem, CommutatorTable> change_of_basis(const CalculusProblem& prob,
                                                            const CommutatorTable& table,
                                                            const BasisChange& map);

// eps-invariance of a coordinate element under the listed generators
// (defaults to the model's acting set), plus a centrality report.
CheckReport invariance_check(const CalculusProblem& prob, const NcPoly& elem,
                             const std::vector<GenId>& gens = {});

// Named problems covering the built-in spacetimes; the forms argument lists
// extra forms ("phi", "varphi", "dchi") beyond the coordinate differentials.
CalculusProblem calculus_problem(const std::string& spacetime,
                                 const std::vector<std::string>& extra_forms);
std::vector<std::string> spacetime_names();

} // namespace kappa

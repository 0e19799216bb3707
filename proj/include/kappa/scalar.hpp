#pragma once

#include "kappa/error.hpp"
#include "kappa/params.hpp"
#include "kappa/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kappa {

// Power product of parameters: sorted (id, exponent) pairs, exponents > 0.
struct Mono {
    std::vector<std::pair<ParamId, uint32_t>> factors;

    uint64_t total_degree() const;
    uint32_t degree_in(ParamId p) const;
    bool empty() const { return factors.empty(); }

    static Mono one() { return {}; }
    static Mono var(ParamId p, uint32_t e = 1);
    Mono operator*(const Mono& o) const;
    // Exact division; caller guarantees divisibility.
    Mono operator/(const Mono& o) const;
    bool divisible_by(const Mono& o) const;
    // Remove all powers of p.
    Mono without(ParamId p) const;

    bool operator==(const Mono& o) const { return factors == o.factors; }
};

// Graded-lexicographic order: total degree first; ties broken lexicographically
// with the smallest ParamId most significant.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Multivariate polynomial over the rationals in the declared parameters.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);
    Poly(long long c) : Poly(Rat(c)) {}
    static Poly var(ParamId p, uint32_t e = 1);
    static Poly term(const Rat& c, const Mono& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rat constant_value() const;   // requires is_constant()
    size_t term_count() const { return terms_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    uint32_t degree_in(ParamId p) const;
    // Coefficient of p^k, as a polynomial in the remaining parameters.
    Poly coeff_of(ParamId p, uint32_t k) const;
    uint64_t total_degree() const;

    // Leading term under the graded-lex order.
    const Mono& leading_mono() const;
    const Rat& leading_coeff() const;

    std::vector<ParamId> params_present() const;

    // Exact division; throws errc::internal if not divisible.
    Poly div_exact(const Poly& d) const;

    // Primitive part over the integers with positive leading coefficient,
    // together with the extracted rational content: *this == content * result.
    Poly primitive(Rat& content) const;

    static Poly gcd(const Poly& a, const Poly& b);

    const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }

    std::string to_string() const;

private:
    std::map<Mono, Rat, MonoLess> terms_;   // zero coefficients never stored

    void insert(const Mono& m, const Rat& c);
    friend class Scalar;
};

// Exact rational function: canonical fraction of two polynomials.
// Invariants: den != 0; gcd(num, den) = 1; num and den have integer,
// jointly-coprime coefficients; den's leading coefficient is positive.
// Canonical form makes structural equality coincide with equality in the field.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long long n) : num_(n), den_(1) {}
    Scalar(long long n, long long d);
    Scalar(const Rat& r);
    static Scalar param(ParamId p);
    static Scalar canonicalize(const Poly& raw_num, const Poly& raw_den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;   // throws division_by_zero
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;   // arbitrary total order for map keys

    // Simultaneous substitution; parameters absent from the map stay put.
    Scalar substitute(const std::map<ParamId, Scalar>& bindings) const;

    // Limit as p -> infinity: 0, finite ratio of leading coefficients, or
    // divergent (nullopt). Divergence is a value for callers, not an error.
    std::optional<Scalar> limit_at_infinity(ParamId p) const;

    uint32_t degree_in(ParamId p) const { return std::max(num_.degree_in(p), den_.degree_in(p)); }
    std::vector<ParamId> params_present() const;

    std::string to_string() const;

private:
    Poly num_, den_;

    struct canonical_tag {};
    Scalar(Poly n, Poly d, canonical_tag) : num_(std::move(n)), den_(std::move(d)) {}
};

} // namespace kappa

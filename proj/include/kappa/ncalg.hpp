#pragma once

#include "kappa/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kappa {

using GenId = uint16_t;

enum class GenKind : uint8_t { ordinary, grouplike };

// Sort class drives the PBW rank order: group-like exponentials first, then
// translations, then central generators, then rotations, then boosts. Every
// swap remainder in the algebras handled here stays within strictly lower
// classes (or shorter words), which is what makes the rewriting terminate.
enum class GenClass : uint8_t { exponential = 0, translation, central, rotation, boost };

struct GroupLikeExponent {
    // exp(sum of rate * primitive); primitives must be mutually commuting
    // ordinary generators of the same presentation.
    std::vector<std::pair<std::string, Scalar>> terms;
};

struct Generator {
    std::string name;
    GenKind kind = GenKind::ordinary;
    GenClass klass = GenClass::translation;
    GroupLikeExponent exponent;   // grouplike only
    std::string dim;              // dimension tag, metadata only
};

// One factor of a word: generator id with an integer power. Ordinary
// generators carry power >= 1; group-likes any nonzero integer.
struct Factor {
    GenId gen;
    int32_t exp;
    auto operator<=>(const Factor&) const = default;
};

// Normal-ordered word: generator ids strictly increasing (ids are ranks).
using Word = std::vector<Factor>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

int64_t word_degree(const Word& w);   // total ordinary degree (group-likes count 0)

class Algebra;

// Noncommutative polynomial in normal-ordered words.
class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(const Scalar& c);

    static NcPoly one() { return NcPoly(Scalar(1)); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    void add(const Word& w, const Scalar& c);
    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly scaled(const Scalar& c) const;

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    int64_t max_degree() const;
    std::string to_string(const Algebra& alg) const;

private:
    std::map<Word, Scalar, WordLess> terms_;
};

// Raw (unordered) term for the rewriting engine's input side.
struct RawTerm {
    Scalar coeff;
    std::vector<Factor> word;   // arbitrary order, arbitrary exponent signs
};

// Tensor power element (rank 2 or 3), componentwise normal-ordered words.
class TensorElem {
public:
    explicit TensorElem(int rank = 2) : rank_(rank) {}

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<Word>, Scalar>& terms() const { return terms_; }

    void add(const std::vector<Word>& slots, const Scalar& c);
    TensorElem operator+(const TensorElem& o) const;
    TensorElem operator-(const TensorElem& o) const;
    TensorElem scaled(const Scalar& c) const;
    bool operator==(const TensorElem& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

    std::string to_string(const Algebra& alg) const;

private:
    int rank_;
    std::map<std::vector<Word>, Scalar> terms_;
};

// Generator set plus swap-relation table; the PBW normal-form engine.
//
// For rank(b) > rank(a) the table stores R(b,a) with b*a = a*b + R(b,a), each
// R itself in normal order. Rows against group-like generators are derived at
// build time from the exponent data: h * F^k = F^k * h + k * (sum_j rate_j *
// [h, g_j]) * F^k, valid because each [h, g_j] is checked to commute with the
// exponent generators.
class Algebra {
public:
    Algebra() = default;

    // Generators must be listed in rank order (class-sorted).
    static Algebra build(std::string name,
                         std::vector<Generator> gens,
                         std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& gens() const { return gens_; }
    const Generator& gen(GenId g) const { return gens_.at(g); }
    GenId gen_id(const std::string& name) const;
    bool has_gen(const std::string& name) const;
    size_t size() const { return gens_.size(); }

    // Stored remainder for an ordinary pair (hi, lo); zero poly if absent.
    const NcPoly& remainder(GenId hi, GenId lo) const;
    // [h, exponent(F)] combination used for group-like swaps.
    const NcPoly& grouplike_remainder(GenId h, GenId f) const;

    NcPoly normal_form(const std::vector<RawTerm>& input) const;
    NcPoly normal_form(const NcPoly& p) const { return p; }   // already normal
    NcPoly mul(const NcPoly& a, const NcPoly& b) const;
    NcPoly bracket(const NcPoly& a, const NcPoly& b) const;
    NcPoly pow(const NcPoly& a, uint32_t n) const;

    TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) const;
    TensorElem tensor_nf(int rank, const std::vector<std::pair<Scalar, std::vector<std::vector<Factor>>>>& raw) const;

    NcPoly of_word(const std::vector<Factor>& w, const Scalar& c = Scalar(1)) const;
    NcPoly of_gen(GenId g, int32_t e = 1) const;
    NcPoly of_gen(const std::string& name, int32_t e = 1) const;

    // total degree counting ordinary generators only
    int64_t ordinary_degree(const Word& w) const;

    // Replace every group-like power by its exponential series truncated at
    // the given order; the result contains ordinary generators only.
    NcPoly expand_grouplike(const NcPoly& p, uint32_t order) const;

    // Reduce sampled words under two distinct reduction strategies and report
    // mismatches. A statistical diamond-lemma probe, not a proof.
    struct ProbeResult {
        int samples = 0;
        std::vector<std::string> mismatches;
        bool ok() const { return mismatches.empty(); }
    };
    ProbeResult confluence_probe(uint32_t degree, int samples, uint64_t seed) const;

    std::string word_to_string(const Word& w) const;

    static constexpr uint64_t step_budget = 1000000;   // per normal_form call

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::map<std::string, GenId> index_;
    std::map<std::pair<GenId, GenId>, NcPoly> rem_;      // ordinary (hi, lo)
    std::map<std::pair<GenId, GenId>, NcPoly> glrem_;    // (ordinary h, grouplike f)
    NcPoly zero_;

    enum class Strategy { leftmost, rightmost };
    NcPoly normal_form_impl(const std::vector<RawTerm>& input, Strategy s) const;
    void derive_grouplike_rows();
    void validate() const;
};

} // namespace kappa

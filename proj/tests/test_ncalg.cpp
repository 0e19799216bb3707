#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kappa/hopf.hpp"

#include <random>

using namespace kappa;

namespace {

Scalar sp(ParamId p) { return Scalar::param(p); }

// Clone an algebra's generator list and bracket table into builder inputs so
// tests can corrupt entries.
void clone_algebra(const Algebra& A, std::vector<Generator>& gens,
                   std::map<std::pair<std::string, std::string>, std::vector<RawTerm>>& brackets) {
    gens = A.gens();
    for (GenId hi = 0; hi < A.size(); ++hi)
        for (GenId lo = 0; lo < hi; ++lo) {
            const NcPoly& r = A.remainder(hi, lo);
            if (r.is_zero()) continue;
            std::vector<RawTerm> raw;
            for (auto& [w, c] : r.terms()) raw.push_back({c, w});
            brackets[{A.gen(hi).name, A.gen(lo).name}] = std::move(raw);
        }
}

} // namespace

TEST_CASE("normal form of N_i P_j reproduces the deformed swap remainder") {
    const auto& H = registry_get("poincare-kappa");
    const Algebra& A = H.alg;
    Scalar k = sp(Params::kappa);

    GenId N1 = A.gen_id("N1"), P1 = A.gen_id("P1"), P2 = A.gen_id("P2"),
          P3 = A.gen_id("P3"), F = A.gen_id("F");

    NcPoly got = A.of_word({{N1, 1}, {P1, 1}});
    // expected: P1 N1 + kappa/2 (1 - F^4) + (1/2k)(P1^2+P2^2+P3^2) - P1^2/k
    NcPoly want;
    want.add({{P1, 1}, {N1, 1}}, Scalar(1));
    want.add({}, k / Scalar(2));
    want.add({{F, 4}}, -k / Scalar(2));
    want.add({{P1, 2}}, Scalar(1) / (Scalar(2) * k) - Scalar(1) / k);
    want.add({{P2, 2}}, Scalar(1) / (Scalar(2) * k));
    want.add({{P3, 2}}, Scalar(1) / (Scalar(2) * k));
    CHECK(got == want);

    // mixed i != j
    NcPoly got12 = A.of_word({{A.gen_id("N1"), 1}, {P2, 1}});
    NcPoly want12;
    want12.add({{P2, 1}, {N1, 1}}, Scalar(1));
    want12.add({{P1, 1}, {P2, 1}}, Scalar(-1) / k);
    CHECK(got12 == want12);
}

TEST_CASE("abelian translation sector reorders with zero remainder") {
    const Algebra& A = registry_get("poincare-kappa").alg;
    GenId P0 = A.gen_id("P0"), P1 = A.gen_id("P1");
    NcPoly got = A.of_word({{P0, 1}, {P1, 1}});
    NcPoly want;
    want.add({{P1, 1}, {P0, 1}}, Scalar(1));
    CHECK(got == want);
}

TEST_CASE("group-like inverse cancels") {
    const Algebra& A = registry_get("poincare-kappa").alg;
    GenId F = A.gen_id("F"), N1 = A.gen_id("N1");
    NcPoly got = A.of_word({{F, 1}, {F, -1}, {N1, 1}});
    CHECK(got == A.of_gen(N1));
}

TEST_CASE("bracket matches the deformed Galilei relation") {
    const Algebra& A = registry_get("galilei-kappa-tilde").alg;
    Scalar kt = sp(Params::kappa_tilde);
    GenId V1 = A.gen_id("V1"), X1 = A.gen_id("X1"), X2 = A.gen_id("X2"), X3 = A.gen_id("X3");

    NcPoly got = A.bracket(A.of_gen(V1), A.of_gen(X1));
    NcPoly want;
    want.add({{X1, 2}}, Scalar(1) / (Scalar(2) * kt) - Scalar(1) / kt);
    want.add({{X2, 2}}, Scalar(1) / (Scalar(2) * kt));
    want.add({{X3, 2}}, Scalar(1) / (Scalar(2) * kt));
    CHECK(got == want);

    CHECK(A.bracket(A.of_gen(X1), A.of_gen(A.gen_id("Xt"))).is_zero());
}

TEST_CASE("bracket with a group-like exponential") {
    const Algebra& A = registry_get("galilei-kappa-tilde").alg;
    Scalar kt = sp(Params::kappa_tilde);
    GenId V1 = A.gen_id("V1"), X1 = A.gen_id("X1"), F = A.gen_id("F");

    // [V_1, exp(Xt/kt)] = (X_1/kt) exp(Xt/kt), with exp(Xt/kt) = F^-2
    NcPoly expXt = A.of_word({{F, -2}});
    NcPoly got = A.bracket(A.of_gen(V1), expXt);
    NcPoly want;
    want.add({{F, -2}, {X1, 1}}, Scalar(1) / kt);
    CHECK(got == want);

    // series oracle: both sides expanded to order 3 agree on degree <= 3
    auto truncate = [](const NcPoly& p, int64_t maxdeg) {
        NcPoly out;
        for (auto& [w, c] : p.terms())
            if (word_degree(w) <= maxdeg) out.add(w, c);
        return out;
    };
    NcPoly lhs = truncate(A.expand_grouplike(got, 3), 3);
    NcPoly rhs = truncate(A.expand_grouplike(A.bracket(A.of_gen(V1), A.expand_grouplike(expXt, 3)), 3), 3);
    CHECK(lhs == rhs);
}

TEST_CASE("tensor normal form distributes componentwise") {
    const auto& H = registry_get("poincare-kappa");
    const Algebra& A = H.alg;
    GenId P1 = A.gen_id("P1"), P2 = A.gen_id("P2");

    // Delta(P_i) Delta(P_j) equals Delta of the product
    TensorElem d1 = coproduct_of(H, A.of_gen(P1));
    TensorElem d2 = coproduct_of(H, A.of_gen(P2));
    TensorElem prod = A.tensor_mul(d1, d2);
    TensorElem direct = coproduct_of(H, A.mul(A.of_gen(P1), A.of_gen(P2)));
    CHECK(prod == direct);

    // unit acts trivially
    TensorElem unit(2);
    unit.add({Word{}, Word{}}, Scalar(1));
    CHECK(A.tensor_mul(unit, d1) == d1);

    // group-like square: Delta(F)^2 = F^2 (x) F^2
    GenId F = A.gen_id("F");
    TensorElem df = coproduct_of(H, A.of_word({{F, 1}}));
    TensorElem df2 = A.tensor_mul(df, df);
    TensorElem want(2);
    want.add({Word{{F, 2}}, Word{{F, 2}}}, Scalar(1));
    CHECK(df2 == want);
}

TEST_CASE("expand_grouplike") {
    const Algebra& A = registry_get("poincare-kappa").alg;
    Scalar k = sp(Params::kappa);
    GenId F = A.gen_id("F"), P0 = A.gen_id("P0");

    // kappa/2 (1 - F^4) at order 2 = P0 - P0^2/kappa
    NcPoly in;
    in.add({}, k / Scalar(2));
    in.add({{F, 4}}, -k / Scalar(2));
    NcPoly got = A.expand_grouplike(in, 2);
    NcPoly want;
    want.add({{P0, 1}}, Scalar(1));
    want.add({{P0, 2}}, Scalar(-1) / k);
    CHECK(got == want);

    // order 0 collapses F to 1
    CHECK(A.expand_grouplike(A.of_word({{F, 1}}), 0) == NcPoly::one());

    // inverse pair cancels at any order
    CHECK(A.expand_grouplike(A.of_word({{F, 2}, {F, -2}}), 3) == NcPoly::one());

    // truncation stability: orders n and n+1 agree on degree <= n terms
    NcPoly e3 = A.expand_grouplike(in, 3), e4 = A.expand_grouplike(in, 4);
    NcPoly diff = e3 - e4;
    for (auto& [w, c] : diff.terms()) CHECK(word_degree(w) > 3);
}

TEST_CASE("normal form is idempotent and multiplication associates") {
    const Algebra& A = registry_get("poincare-kappa").alg;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> gen_pick(0, (int)A.size() - 1);
    for (int s = 0; s < 25; ++s) {
        auto rand_poly = [&]() {
            std::vector<Factor> w;
            for (int i = 0; i < 2; ++i) w.push_back({(GenId)gen_pick(rng), 1});
            return A.of_word(w);
        };
        NcPoly p = rand_poly(), q = rand_poly(), r = rand_poly();
        CHECK(A.mul(A.mul(p, q), r) == A.mul(p, A.mul(q, r)));
    }
}

TEST_CASE("bracket is antisymmetric after normalization") {
    for (const char* name : {"poincare-kappa", "galilei-kappa-tilde", "galilei-ext-kappa-hat"}) {
        const Algebra& A = registry_get(name).alg;
        for (GenId a = 0; a < A.size(); ++a)
            for (GenId b = 0; b < A.size(); ++b) {
                NcPoly s = A.bracket(A.of_gen(a), A.of_gen(b)) + A.bracket(A.of_gen(b), A.of_gen(a));
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("confluence probe: built-ins agree, corrupted table mismatches") {
    const Algebra& A = registry_get("poincare-kappa").alg;
    auto pr = A.confluence_probe(3, 200, 7);
    CHECK(pr.ok());
    CHECK(pr.samples == 200);

    // flip the [N1, P1] constant coefficient and probe again
    std::vector<Generator> gens;
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    clone_algebra(A, gens, brackets);
    for (auto& t : brackets[{"N1", "P1"}])
        if (t.word.empty()) t.coeff = -t.coeff;
    Algebra bad = Algebra::build("poincare-kappa-corrupt", gens, brackets);
    auto pb = bad.confluence_probe(4, 400, 7);
    CHECK(!pb.ok());
}

TEST_CASE("non-normal-ordered relation entries are rejected at build") {
    // remainder written as b a (an inversion) is not a valid table entry
    std::vector<Generator> gens = {{"a", GenKind::ordinary, GenClass::translation, {}, ""},
                                   {"b", GenKind::ordinary, GenClass::boost, {}, ""}};
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    brackets[{"b", "a"}] = {{Scalar(1), {{1, 1}, {0, 1}}}};
    CHECK_THROWS_AS(Algebra::build("pathological", gens, brackets), error);
}

TEST_CASE("group-like side condition is enforced at build") {
    // exponent references a generator whose bracket with the host fails the
    // commutation requirement: [b, a] = b is not allowed with F = exp(a)
    std::vector<Generator> gens = {
        {"F", GenKind::grouplike, GenClass::exponential, {{{"a", Scalar(1)}}}, ""},
        {"a", GenKind::ordinary, GenClass::translation, {}, ""},
        {"b", GenKind::ordinary, GenClass::boost, {}, ""}};
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    brackets[{"b", "a"}] = {{Scalar(1), {{2, 1}}}};   // [b,a] = b, and [b,a] does not commute with a
    CHECK_THROWS_AS(Algebra::build("bad-grouplike", gens, brackets), error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kappa/contraction.hpp"
#include "kappa/scenarios.hpp"

using namespace kappa;

namespace {

Scalar sp(ParamId p) { return Scalar::param(p); }

// the standard nonrelativistic redefinitions: spatial generators survive,
// boosts scale by c, the timelike translation by 1/c
ContractionMap galilean_map() {
    ContractionMap m;
    m.limit_param = Params::c;
    m.gens["P0"] = {"Xt", -1};
    for (int i = 1; i <= 3; ++i) {
        std::string s = std::to_string(i);
        m.gens["P" + s] = {"X" + s, 0};
        m.gens["N" + s] = {"V" + s, 1};
        m.gens["M" + s] = {"J" + s, 0};
    }
    return m;
}

} // namespace

TEST_CASE("contraction of the deformed algebra onto the deformed Galilei algebra") {
    auto pkt = substitute_params(registry_get("poincare-kappa"),
                                 {{Params::kappa, sp(Params::kappa_tilde) / sp(Params::c)}},
                                 "poincare-kappa-tilde");
    auto got = apply_contraction(pkt, galilean_map(), "galilei-from-contraction");
    auto cmp = compare_presentations(got, registry_get("galilei-kappa-tilde"), {});
    for (auto& e : cmp.checks.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
}

TEST_CASE("contraction of the extended algebra onto the extended Galilei algebra") {
    auto pke = substitute_params(registry_get("poincare-kappa-ext"),
                                 {{Params::kappa, sp(Params::kappa_hat) * sp(Params::c)}},
                                 "poincare-kappa-hat-ext");
    ContractionMap m = galilean_map();
    auto got = apply_contraction(pke, m, "galilei-ext-from-contraction");
    // the contracted group-like carrier must be named like the registry's
    auto renamed = rename_generators(got, {{"F", "G"}}, got.name + "-renamed");
    auto cmp = compare_presentations(renamed, registry_get("galilei-ext-kappa-hat"), {});
    for (auto& e : cmp.checks.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
    CHECK(check_jacobi(renamed).all_pass());
    CHECK(check_hopf_axioms(renamed, 2, 5).all_pass());
}

TEST_CASE("identity contraction map leaves a presentation unchanged") {
    ContractionMap id;
    id.limit_param = Params::c;
    auto got = apply_contraction(registry_get("galilei-kappa-tilde"), id, "identity-image");
    CHECK(compare_presentations(got, registry_get("galilei-kappa-tilde"), {}).pass());
}

TEST_CASE("wrong-order limits diverge with a named diagnostic") {
    // no kappa substitution: the extended presentation has no direct limit
    CHECK_THROWS_AS(
        apply_contraction(registry_get("poincare-kappa-ext"), galilean_map(), "bad"), error);
    // the kappa_tilde route cannot carry the central extension either
    auto pte = substitute_params(registry_get("poincare-kappa-ext"),
                                 {{Params::kappa, sp(Params::kappa_tilde) / sp(Params::c)}},
                                 "poincare-kappa-tilde-ext");
    try {
        apply_contraction(pte, galilean_map(), "bad2");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::divergent_structure_constant);
    }
}

TEST_CASE("classical limits reproduce the undeformed presentations") {
    auto g1 = classical_limit(registry_get("galilei-ext-kappa-hat"), Params::kappa_hat, 2,
                              "galilei-ext-limit");
    CHECK(compare_presentations(g1, registry_get("galilei-ext-classical"), {}).pass());

    auto g2 = classical_limit(registry_get("galilei-kappa-tilde"), Params::kappa_tilde, 2,
                              "galilei-limit");
    CHECK(compare_presentations(g2, registry_get("galilei-classical"), {}).pass());

    auto g3 = classical_limit(registry_get("poincare-kappa"), Params::kappa, 2, "poincare-limit");
    CHECK(compare_presentations(g3, registry_get("poincare-classical"), {}).pass());

    // a classical presentation is its own limit
    auto g4 = classical_limit(registry_get("galilei-classical"), Params::kappa, 2, "self");
    CHECK(compare_presentations(g4, registry_get("galilei-classical"), {}).pass());
}

TEST_CASE("extended-algebra square commutes") {
    auto pke = substitute_params(registry_get("poincare-kappa-ext"),
                                 {{Params::kappa, sp(Params::kappa_hat) * sp(Params::c)}},
                                 "poincare-kappa-hat-ext");
    AlgebraSquare sq;
    sq.start = &pke;
    sq.horizontal = galilean_map();
    sq.vertical_param = Params::kappa_hat;
    sq.order = 2;
    auto rep = check_diagram(sq);
    for (auto& e : rep.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
}

TEST_CASE("element contraction carries the invariants to the Galilei ones") {
    const Algebra& src = registry_get("poincare-kappa").alg;
    const Algebra& dst = registry_get("galilei-kappa-tilde").alg;
    ContractionMap m = galilean_map();
    m.params[Params::kappa] = sp(Params::kappa_tilde) / sp(Params::c);

    NcPoly c1 = contract_element(src, scenarios::casimir("poincare-c1"), m, Scalar(1), dst);
    CHECK(c1 == scenarios::casimir("galilei-tilde-c1"));

    NcPoly xi = contract_element(
        registry_get("galilei-ext-kappa-hat").alg,
        registry_get("galilei-ext-kappa-hat").alg.of_gen("Xi"), ContractionMap{},
        Scalar(1), registry_get("galilei-ext-kappa-hat").alg);
    CHECK(xi == registry_get("galilei-ext-kappa-hat").alg.of_gen("Xi"));
}

TEST_CASE("table contraction: the scalar-form solution degenerates to one entry") {
    // with kappa -> kappa_hat c all commutators die except [x_i, dx_j]
    auto src = calculus_problem("kappa-minkowski", {"phi"});
    auto dst = calculus_problem("galilei-classical", {"phi"});
    Scalar k = sp(Params::kappa), kh = sp(Params::kappa_hat);
    CommutatorTable t;
    auto set = [&](const std::string& c, const std::string& a, const std::string& b, Scalar v) {
        t[{src.coords.gen_id(c), src.forms.index_of(a), src.forms.index_of(b)}] = v;
    };
    set("x0", "phi", "dx0", Scalar(1) / k);
    set("x0", "dx0", "phi", Scalar(1) / k);
    for (int i = 1; i <= 3; ++i) {
        std::string xi = "x" + std::to_string(i);
        set(xi, "phi", "d" + xi, Scalar(1) / k);
        set(xi, "dx0", "d" + xi, Scalar(1) / k);
        set(xi, "d" + xi, "dx0", Scalar(1) / k);
        set(xi, "d" + xi, "phi", -Scalar(1) / k);
    }
    std::map<std::string, GenScale> cmap = {{"x0", {"t", 1}}};
    std::map<std::string, GenScale> fmap = {{"dx0", {"dt", 1}}};
    auto got = contract_table(src, t, cmap, fmap,
                              {{Params::kappa, kh * sp(Params::c)}}, Params::c, dst);
    CommutatorTable want;
    for (int i = 1; i <= 3; ++i) {
        std::string xi = "x" + std::to_string(i);
        want[{dst.coords.gen_id(xi), dst.forms.index_of("d" + xi), dst.forms.index_of("dt")}] =
            Scalar(1) / kh;
    }
    CHECK(got == want);
}

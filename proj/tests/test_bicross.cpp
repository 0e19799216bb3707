#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kappa/scenarios.hpp"

using namespace kappa;

namespace {
Scalar sp(ParamId p) { return Scalar::param(p); }
}

TEST_CASE("module algebra axioms for the Lorentz action on deformed translations") {
    auto D = scenarios::poincare_kappa_data();
    auto rep = check_module_algebra(D);
    for (auto& e : rep.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
}

TEST_CASE("trivial action passes the module suite") {
    auto D = scenarios::trans_kappa_data();
    CHECK(check_module_algebra(D).all_pass());
    CHECK(check_comodule_coalgebra(D).all_pass());
    CHECK(check_compatibility(D).all_pass());
}

TEST_CASE("comodule coalgebra axioms for the boost coaction") {
    auto D = scenarios::poincare_kappa_data();
    auto rep = check_comodule_coalgebra(D);
    for (auto& e : rep.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
}

TEST_CASE("compatibility conditions for the kappa-Poincare data") {
    auto D = scenarios::poincare_kappa_data();
    auto rep = check_compatibility(D);
    for (auto& e : rep.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
    // the mixed condition is automatic here and the remark records that
    bool remarked = false;
    for (auto& e : rep.entries)
        if (e.id == "mixed-compat" && !e.remark.empty()) remarked = true;
    CHECK(remarked);
}

TEST_CASE("bicrossproduct reconstruction of kappa-Poincare") {
    auto D = scenarios::poincare_kappa_data();
    HopfPresentation K = build_bicrossproduct(D, "poincare-kappa-built");
    auto cmp = compare_presentations(K, registry_get("poincare-kappa"), {});
    for (auto& e : cmp.checks.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
    CHECK(cmp.pass());
}

TEST_CASE("the deformed translation algebra splits as a semidirect coproduct") {
    auto D = scenarios::trans_kappa_data();
    HopfPresentation K = build_bicrossproduct(D, "trans-kappa-built");
    auto cmp = compare_presentations(K, registry_get("trans-kappa"), {});
    CHECK(cmp.pass());
}

TEST_CASE("bicrossproduct reconstruction of the deformed Galilei algebra") {
    auto D = scenarios::galilei_kappa_tilde_data();
    HopfPresentation K = build_bicrossproduct(D, "galilei-kappa-tilde-built");
    auto cmp = compare_presentations(K, registry_get("galilei-kappa-tilde"), {});
    for (auto& e : cmp.checks.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
}

TEST_CASE("comparing distinct algebras fails with nonzero residuals") {
    auto cmp = compare_presentations(
        registry_get("poincare-kappa"), registry_get("galilei-kappa-tilde"),
        {{"P1", "X1"}, {"P2", "X2"}, {"P3", "X3"}, {"P0", "Xt"},
         {"M1", "J1"}, {"M2", "J2"}, {"M3", "J3"}, {"N1", "V1"}, {"N2", "V2"}, {"N3", "V3"}});
    CHECK(!cmp.pass());
}

TEST_CASE("cocycle data passes the twisted axiom suites") {
    auto D = scenarios::poincare_ext_cocycle_data();
    auto rep1 = check_module_algebra(D);
    for (auto& e : rep1.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
    auto rep2 = check_comodule_coalgebra(D);
    CHECK(rep2.all_pass());
    auto rep3 = check_compatibility(D);
    for (auto& e : rep3.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
}

TEST_CASE("cocycle bicrossproduct reproduces the extended presentation") {
    auto D = scenarios::poincare_ext_cocycle_data();
    HopfPresentation K = build_bicrossproduct(D, "poincare-ext-built");
    const Algebra& A = K.alg;
    Scalar k = sp(Params::kappa);

    // [N_i, P_j] carries the combined exponential: delta_ij [ kappa/2 (1 -
    // F^4 G^4) + P^2/(2 kappa) ] - P_i P_j / kappa
    GenId F = A.gen_id("F"), G = A.gen_id("G");
    GenId N1 = A.gen_id("N1"), P1 = A.gen_id("P1"), P2 = A.gen_id("P2"), P3 = A.gen_id("P3");
    NcPoly got = A.bracket(A.of_gen(N1), A.of_gen(P1));
    NcPoly want;
    want.add({}, k / Scalar(2));
    want.add({{G, 4}, {F, 4}}, -k / Scalar(2));
    want.add({{P1, 2}}, Scalar(1) / (Scalar(2) * k) - Scalar(1) / k);
    want.add({{P2, 2}}, Scalar(1) / (Scalar(2) * k));
    want.add({{P3, 2}}, Scalar(1) / (Scalar(2) * k));
    {
        INFO("got: ", got.to_string(A));
        CHECK(got == want);
    }

    // Delta(P_i) = P_i (x) 1 + G^2 F^2 (x) P_i
    TensorElem dp = coproduct_of(K, A.of_gen(P1));
    TensorElem wantp(2);
    wantp.add({Word{{P1, 1}}, Word{}}, Scalar(1));
    wantp.add({Word{{G, 2}, {F, 2}}, Word{{P1, 1}}}, Scalar(1));
    {
        INFO("got: ", dp.to_string(A));
        CHECK(dp == wantp);
    }

    // Delta(N_i) = N_i (x) 1 + G^2 F^2 (x) N_i + (1/kappa) eps_ijk P_j (x) M_k
    TensorElem dn = coproduct_of(K, A.of_gen(N1));
    TensorElem wantn(2);
    wantn.add({Word{{N1, 1}}, Word{}}, Scalar(1));
    wantn.add({Word{{G, 2}, {F, 2}}, Word{{N1, 1}}}, Scalar(1));
    wantn.add({Word{{P2, 1}}, Word{{A.gen_id("M3"), 1}}}, Scalar(1) / k);
    wantn.add({Word{{P3, 1}}, Word{{A.gen_id("M2"), 1}}}, Scalar(-1) / k);
    {
        INFO("got: ", dn.to_string(A));
        CHECK(dn == wantn);
    }

    // the built object is a Hopf algebra
    CHECK(check_jacobi(K).all_pass());
    CHECK(check_hopf_axioms(K, 2, 5).all_pass());
}

TEST_CASE("built bicrossproducts satisfy the Hopf axioms") {
    auto D = scenarios::poincare_kappa_data();
    HopfPresentation K = build_bicrossproduct(D, "pk-built");
    CHECK(check_hopf_axioms(K, 2, 3).all_pass());
}

TEST_CASE("an explicitly zero cocycle reduces to the plain construction") {
    auto D = scenarios::poincare_kappa_data();
    // store a vanishing cocycle entry: the twisted product and coproduct
    // formulas must collapse to the plain ones
    D.cocycle[{D.H.alg.gen_id("N1"), D.H.alg.gen_id("N2")}] = NcPoly();
    CHECK(!D.xi_trivial());
    HopfPresentation K = build_bicrossproduct(D, "pk-built-zero-cocycle");
    auto cmp = compare_presentations(K, registry_get("poincare-kappa"), {});
    CHECK(cmp.pass());
}

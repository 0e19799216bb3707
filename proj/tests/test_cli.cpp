#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kappa/deffile.hpp"
#include "kappa/report.hpp"

using namespace kappa;

namespace {

// the relativistic presentation written out in the definition grammar
const char* poincare_text = R"(
kind hopf
name poincare-kappa-inline
[params]
kappa
[generators]
F  exponential exp(P0: -1/(2*kappa))
P1 translation
P2 translation
P3 translation
P0 translation
M1 rotation
M2 rotation
M3 rotation
N1 boost
N2 boost
N3 boost
[relations]
M1 M2 = 1 M3
M1 M3 = -1 M2
M2 M3 = 1 M1
M1 P2 = 1 P3
M1 P3 = -1 P2
M2 P1 = -1 P3
M2 P3 = 1 P1
M3 P1 = 1 P2
M3 P2 = -1 P1
M1 N2 = 1 N3
M1 N3 = -1 N2
M2 N1 = -1 N3
M2 N3 = 1 N1
M3 N1 = 1 N2
M3 N2 = -1 N1
N1 N2 = -1 M3
N1 N3 = 1 M2
N2 N3 = -1 M1
N1 P0 = 1 P1
N2 P0 = 1 P2
N3 P0 = 1 P3
N1 P1 = kappa/2 1 ; -(kappa/2) F^4 ; -(1/(2*kappa)) P1^2 ; 1/(2*kappa) P2^2 ; 1/(2*kappa) P3^2
N2 P2 = kappa/2 1 ; -(kappa/2) F^4 ; 1/(2*kappa) P1^2 ; -(1/(2*kappa)) P2^2 ; 1/(2*kappa) P3^2
N3 P3 = kappa/2 1 ; -(kappa/2) F^4 ; 1/(2*kappa) P1^2 ; 1/(2*kappa) P2^2 ; -(1/(2*kappa)) P3^2
N1 P2 = -(1/kappa) P1 P2
N1 P3 = -(1/kappa) P1 P3
N2 P1 = -(1/kappa) P1 P2
N2 P3 = -(1/kappa) P2 P3
N3 P1 = -(1/kappa) P1 P3
N3 P2 = -(1/kappa) P2 P3
[coproduct]
P1 = 1 P1 (x) 1 ; 1 F^2 (x) P1
P2 = 1 P2 (x) 1 ; 1 F^2 (x) P2
P3 = 1 P3 (x) 1 ; 1 F^2 (x) P3
N1 = 1 N1 (x) 1 ; 1 F^2 (x) N1 ; 1/kappa P2 (x) M3 ; -(1/kappa) P3 (x) M2
N2 = 1 N2 (x) 1 ; 1 F^2 (x) N2 ; 1/kappa P3 (x) M1 ; -(1/kappa) P1 (x) M3
N3 = 1 N3 (x) 1 ; 1 F^2 (x) N3 ; 1/kappa P1 (x) M2 ; -(1/kappa) P2 (x) M1
[antipode]
P0 = -1 P0
P1 = -1 F^-2 P1
P2 = -1 F^-2 P2
P3 = -1 F^-2 P3
M1 = -1 M1
M2 = -1 M2
M3 = -1 M3
N1 = -1 F^-2 N1 ; 1/kappa F^-2 P2 M3 ; -(1/kappa) F^-2 P3 M2
N2 = -1 F^-2 N2 ; 1/kappa F^-2 P3 M1 ; -(1/kappa) F^-2 P1 M3
N3 = -1 F^-2 N3 ; 1/kappa F^-2 P1 M2 ; -(1/kappa) F^-2 P2 M1
)";

} // namespace

TEST_CASE("scalar expression parser") {
    Scalar k = Scalar::param(Params::kappa), m = Scalar::param(Params::m),
           c = Scalar::param(Params::c);
    CHECK(parse_scalar_expr("kappa/2") == k / Scalar(2));
    CHECK(parse_scalar_expr("-(1/(2*kappa))") == -Scalar(1) / (Scalar(2) * k));
    CHECK(parse_scalar_expr("m*c/kappa") == m * c / k);
    CHECK(parse_scalar_expr("kappa^2 - 1") == k * k - Scalar(1));
    CHECK(parse_scalar_expr("2") == Scalar(2));
    CHECK_THROWS_AS(parse_scalar_expr("kappa +"), error);
    CHECK_THROWS_AS(parse_scalar_expr("nosuchparam"), error);
}

TEST_CASE("definition file reproduces the registry presentation") {
    ParsedFile f = parse_definition_text(poincare_text, "inline");
    REQUIRE(f.kind == ParsedFile::Kind::hopf);
    auto cmp = compare_presentations(*f.hopf, registry_get("poincare-kappa"), {});
    for (auto& e : cmp.checks.entries) {
        INFO(e.id, " ", e.subjects, ": ", e.residual_text);
        CHECK(e.pass);
    }
}

TEST_CASE("missing antipode entry is a validation error naming the generator") {
    std::string text = poincare_text;
    auto at = text.find("P1 = -1 F^-2 P1");
    REQUIRE(at != std::string::npos);
    text.erase(at, std::string("P1 = -1 F^-2 P1").size());
    try {
        parse_definition_text(text, "inline");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::validation);
        CHECK(std::string(e.what()).find("P1") != std::string::npos);
    }
}

TEST_CASE("corrupted bracket builds but fails downstream checks") {
    std::string text = poincare_text;
    auto at = text.find("N1 P1 = kappa/2 1");
    REQUIRE(at != std::string::npos);
    text.replace(at, std::string("N1 P1 = kappa/2 1").size(), "N1 P1 = -(kappa/2) 1");
    ParsedFile f = parse_definition_text(text, "inline");
    auto rep = check_jacobi(*f.hopf);
    CHECK(!rep.all_pass());
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_definition_text("kind hopf\n[generators]\nbad", "somefile");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::parse);
        CHECK(std::string(e.what()).find("somefile:3") != std::string::npos);
    }
}

TEST_CASE("contraction map files parse") {
    const char* text = R"(
kind contraction
[contraction]
limit c
param kappa = kappa_tilde/c
gen P0 = c^-1 Xt
gen N1 = c V1
gen P1 = X1
)";
    ParsedFile f = parse_definition_text(text, "inline");
    REQUIRE(f.kind == ParsedFile::Kind::contraction);
    CHECK(f.contraction->limit_param == Params::c);
    CHECK(f.contraction->gens.at("P0").power == -1);
    CHECK(f.contraction->gens.at("N1").power == 1);
    CHECK(f.contraction->gens.at("P1").power == 0);
    CHECK(f.contraction->params.at(Params::kappa) ==
          Scalar::param(Params::kappa_tilde) / Scalar::param(Params::c));
}

TEST_CASE("structured reports are byte-stable for a fixed seed") {
    auto make = [&]() {
        Report r;
        r.seed = 42;
        r.input_digest = digest_hex("fixed input");
        r.suites.push_back(check_jacobi(registry_get("galilei-kappa-tilde")));
        r.suites.push_back(check_hopf_axioms(registry_get("galilei-kappa-tilde"), 3, 42));
        r.seconds = 123.0;   // must not influence the structured form
        return r.to_json();
    };
    std::string a = make();
    Report alt;
    alt.seed = 42;
    alt.input_digest = digest_hex("fixed input");
    alt.suites.push_back(check_jacobi(registry_get("galilei-kappa-tilde")));
    alt.suites.push_back(check_hopf_axioms(registry_get("galilei-kappa-tilde"), 3, 42));
    alt.seconds = 0.001;
    CHECK(a == alt.to_json());
    CHECK(a.find("seconds") == std::string::npos);
}

TEST_CASE("bicross definition files parse into data packages") {
    const char* text = R"(
kind bicross
[bicross]
H = trans3
A = trans0
alpha = trivial
[coaction]
P1 = 1 F^2 (x) P1
P2 = 1 F^2 (x) P2
P3 = 1 F^2 (x) P3
)";
    ParsedFile f = parse_definition_text(text, "inline");
    REQUIRE(f.kind == ParsedFile::Kind::bicross);
    CHECK(f.bicross->alpha_trivial);
    HopfPresentation K = build_bicrossproduct(*f.bicross, "from-file");
    CHECK(compare_presentations(K, registry_get("trans-kappa"), {}).pass());
}

TEST_CASE("calculus definition files build solvable problems") {
    const char* text = R"(
kind calculus
name tiny-newton
[spacetime]
symmetry = galilei-classical
coords x1 x2 x3 t
[action]
J1 x1 = 0
J1 x2 = 1 x3
J1 x3 = -1 x2
J1 t = 0
J2 x1 = -1 x3
J2 x2 = 0
J2 x3 = 1 x1
J2 t = 0
J3 x1 = 1 x2
J3 x2 = -1 x1
J3 x3 = 0
J3 t = 0
V1 x1 = -1 t
V1 x2 = 0
V1 x3 = 0
V1 t = 0
V2 x1 = 0
V2 x2 = -1 t
V2 x3 = 0
V2 t = 0
V3 x1 = 0
V3 x2 = 0
V3 x3 = -1 t
V3 t = 0
X1 x1 = 1 1
X1 x2 = 0
X1 x3 = 0
X1 t = 0
X2 x1 = 0
X2 x2 = 1 1
X2 x3 = 0
X2 t = 0
X3 x1 = 0
X3 x2 = 0
X3 x3 = 1 1
X3 t = 0
Xt x1 = 0
Xt x2 = 0
Xt x3 = 0
Xt t = 1 1
)";
    ParsedFile f = parse_definition_text(text, "inline");
    REQUIRE(f.kind == ParsedFile::Kind::calculus);
    auto sol = solve_calculus(*f.calculus);
    CHECK(sol.cls == CalcClass::family);
    CHECK(sol.family_dim == 1);
}

TEST_CASE("a corrupted coordinate bracket shifts the solver away from the known table") {
    // doubling the deformation of one bracket still builds, but the unique
    // covariant solution no longer matches the undoctored one
    std::string text = R"(
kind calculus
name corrupt-b
[spacetime]
symmetry = poincare-kappa
coords x1 x2 x3 x0
bracket x0 x1 = -(2/kappa) x1
bracket x0 x2 = -(1/kappa) x2
bracket x0 x3 = -(1/kappa) x3
[action]
)";
    // reuse the standard action table
    for (const char* g : {"M1", "M2", "M3", "N1", "N2", "N3", "P1", "P2", "P3", "P0"})
        for (const char* x : {"x1", "x2", "x3", "x0"}) {
            std::string entry;
            std::string gs = g, xs = x;
            auto eps_term = [&](int i, int j) {
                int k = 6 - i - j;   // the remaining index
                int e = (j - i + 3) % 3 == 1 ? 1 : -1;
                return (e == 1 ? std::string("1 x") : std::string("-1 x")) + std::to_string(k);
            };
            if (gs[0] == 'M') {
                int i = gs[1] - '0';
                if (xs == "x0" || xs == "x" + std::to_string(i))
                    entry = "0";
                else
                    entry = eps_term(i, xs[1] - '0');
            } else if (gs[0] == 'N') {
                int i = gs[1] - '0';
                if (xs == "x0")
                    entry = "-1 x" + std::to_string(i);
                else if (xs == "x" + std::to_string(i))
                    entry = "-1 x0";
                else
                    entry = "0";
            } else if (gs == "P0") {
                entry = xs == "x0" ? "1 1" : "0";
            } else {
                int i = gs[1] - '0';
                entry = xs == "x" + std::to_string(i) ? "1 1" : "0";
            }
            text += gs + " " + xs + " = " + entry + "\n";
        }
    ParsedFile f = parse_definition_text(text, "inline");
    auto sol = solve_calculus(*f.calculus);
    // the doubled bracket propagates into the covariant solution
    Scalar k = Scalar::param(Params::kappa);
    Scalar got = table_entry(sol.linear_table, f.calculus->coords.gen_id("x1"),
                             f.calculus->forms.index_of("dx1"), f.calculus->forms.index_of("dx0"));
    CHECK(got != Scalar(1) / k);
}

#include "kappa/hopf.hpp"

#include <functional>
#include <mutex>

namespace kappa {

namespace {

// Totally antisymmetric epsilon on indices 1..3.
int eps3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    int swaps = 0;
    int v[3] = {i, j, k};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2 - a; ++b)
            if (v[b] > v[b + 1]) { std::swap(v[b], v[b + 1]); ++swaps; }
    return swaps % 2 == 0 ? 1 : -1;
}

Scalar sp(ParamId p) { return Scalar::param(p); }

// Assembles a presentation from name-keyed structure tables.
struct Builder {
    std::vector<Generator> gens;
    std::map<std::string, GenId> ids;
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    std::map<std::string, TensorElem> cops;
    std::map<std::string, Scalar> eps;
    std::map<std::string, NcPoly> antis;

    void gen(const std::string& name, GenClass kl, const std::string& dim = "") {
        ids[name] = (GenId)gens.size();
        gens.push_back({name, GenKind::ordinary, kl, {}, dim});
    }
    void grouplike(const std::string& name, std::vector<std::pair<std::string, Scalar>> exponent) {
        ids[name] = (GenId)gens.size();
        gens.push_back({name, GenKind::grouplike, GenClass::exponential, {std::move(exponent)}, ""});
    }

    Word w(std::initializer_list<std::pair<const char*, int>> fs) const {
        Word out;
        for (auto& [n, e] : fs) out.push_back({ids.at(n), e});
        return out;
    }

    void bracket(const std::string& b, const std::string& a, std::vector<RawTerm> terms) {
        brackets[{b, a}] = std::move(terms);
    }

    // [b, a] = c * single generator
    void bracket1(const std::string& b, const std::string& a, const Scalar& c, const std::string& g) {
        if (!c.is_zero()) bracket(b, a, {{c, w({{g.c_str(), 1}})}});
    }

    void cop_entry(const std::string& g, std::vector<std::pair<Scalar, std::pair<Word, Word>>> terms) {
        TensorElem t(2);
        for (auto& [c, uv] : terms) t.add({uv.first, uv.second}, c);
        cops[g] = std::move(t);
    }

    void anti(const std::string& g, std::vector<RawTerm> terms) {
        NcPoly p;
        for (auto& t : terms) {
            Word word;
            for (auto& f : t.word) word.push_back(f);
            p.add(word, t.coeff);
        }
        antis[g] = std::move(p);
    }

    HopfPresentation build(const std::string& name) {
        return build_hopf(name, gens, brackets, cops, eps, antis);
    }
};

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

// Common so(3) sector: [R_i, R_j] = eps_ijk R_k plus the vector rule
// [R_i, A_j] = eps_ijk A_k for each listed vector triple.
void rotation_sector(Builder& b, const std::string& rot,
                     const std::vector<std::string>& vectors) {
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                if (int e = eps3(i, j, k))
                    b.bracket1(idx(rot, i), idx(rot, j), Scalar(e), idx(rot, k));
    for (auto& v : vectors)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    if (int e = eps3(i, j, k)) b.bracket1(idx(rot, i), idx(v, j), Scalar(e), idx(v, k));
}

void minus_antipodes(Builder& b, const std::vector<std::string>& gens) {
    for (auto& g : gens) b.anti(g, {{Scalar(-1), b.w({{g.c_str(), 1}})}});
}

// ------------------------------------------------------------------ builders

// kappa-Poincare algebra in the bicrossproduct basis; F = exp(-P0/(2 kappa)).
HopfPresentation make_poincare_kappa() {
    Scalar k = sp(Params::kappa);
    Builder b;
    b.grouplike("F", {{"P0", Scalar(-1) / (Scalar(2) * k)}});
    for (int i = 1; i <= 3; ++i) b.gen(idx("P", i), GenClass::translation, "1/length");
    b.gen("P0", GenClass::translation, "1/length");
    for (int i = 1; i <= 3; ++i) b.gen(idx("M", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("N", i), GenClass::boost);

    rotation_sector(b, "M", {"P", "N"});
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l)) b.bracket1(idx("N", i), idx("N", j), Scalar(-e), idx("M", l));
    for (int i = 1; i <= 3; ++i) b.bracket1(idx("N", i), "P0", Scalar(1), idx("P", i));

    // [N_i, P_j] = delta_ij [ kappa/2 (1 - F^4) + (1/2kappa) P^2 ] - (1/kappa) P_i P_j
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::vector<RawTerm> terms;
            if (i == j) {
                terms.push_back({k / Scalar(2), {}});
                terms.push_back({-k / Scalar(2), b.w({{"F", 4}})});
                for (int l = 1; l <= 3; ++l)
                    terms.push_back({Scalar(1) / (Scalar(2) * k), b.w({{idx("P", l).c_str(), 2}})});
            }
            {
                Scalar c = Scalar(-1) / k;
                if (i == j)
                    terms.push_back({c, b.w({{idx("P", i).c_str(), 2}})});
                else
                    terms.push_back({c, b.w({{idx("P", std::min(i, j)).c_str(), 1},
                                             {idx("P", std::max(i, j)).c_str(), 1}})});
            }
            b.bracket(idx("N", i), idx("P", j), std::move(terms));
        }

    for (int i = 1; i <= 3; ++i) {
        b.cop_entry(idx("P", i), {{Scalar(1), {b.w({{idx("P", i).c_str(), 1}}), {}}},
                                  {Scalar(1), {b.w({{"F", 2}}), b.w({{idx("P", i).c_str(), 1}})}}});
        std::vector<std::pair<Scalar, std::pair<Word, Word>>> dn = {
            {Scalar(1), {b.w({{idx("N", i).c_str(), 1}}), {}}},
            {Scalar(1), {b.w({{"F", 2}}), b.w({{idx("N", i).c_str(), 1}})}}};
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l))
                    dn.push_back({Scalar(e) / k,
                                  {b.w({{idx("P", j).c_str(), 1}}), b.w({{idx("M", l).c_str(), 1}})}});
        b.cop_entry(idx("N", i), dn);
    }

    minus_antipodes(b, {"P0", "M1", "M2", "M3"});
    for (int i = 1; i <= 3; ++i)
        b.anti(idx("P", i), {{Scalar(-1), b.w({{"F", -2}, {idx("P", i).c_str(), 1}})}});
    for (int i = 1; i <= 3; ++i) {
        std::vector<RawTerm> st = {{Scalar(-1), b.w({{"F", -2}, {idx("N", i).c_str(), 1}})}};
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l))
                    st.push_back({Scalar(e) / k,
                                  b.w({{"F", -2}, {idx("P", j).c_str(), 1}, {idx("M", l).c_str(), 1}})});
        b.anti(idx("N", i), st);
    }
    return b.build("poincare-kappa");
}

// deformed translation Hopf algebra U_kappa(Tr)
HopfPresentation make_trans_kappa() {
    Scalar k = sp(Params::kappa);
    Builder b;
    b.grouplike("F", {{"P0", Scalar(-1) / (Scalar(2) * k)}});
    for (int i = 1; i <= 3; ++i) b.gen(idx("P", i), GenClass::translation, "1/length");
    b.gen("P0", GenClass::translation, "1/length");
    for (int i = 1; i <= 3; ++i)
        b.cop_entry(idx("P", i), {{Scalar(1), {b.w({{idx("P", i).c_str(), 1}}), {}}},
                                  {Scalar(1), {b.w({{"F", 2}}), b.w({{idx("P", i).c_str(), 1}})}}});
    minus_antipodes(b, {"P0"});
    for (int i = 1; i <= 3; ++i)
        b.anti(idx("P", i), {{Scalar(-1), b.w({{"F", -2}, {idx("P", i).c_str(), 1}})}});
    return b.build("trans-kappa");
}

HopfPresentation make_lorentz_classical() {
    Builder b;
    for (int i = 1; i <= 3; ++i) b.gen(idx("M", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("N", i), GenClass::boost);
    rotation_sector(b, "M", {"N"});
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l)) b.bracket1(idx("N", i), idx("N", j), Scalar(-e), idx("M", l));
    minus_antipodes(b, {"M1", "M2", "M3", "N1", "N2", "N3"});
    return b.build("lorentz-classical");
}

// pseudoextended kappa-Poincare; F = exp(-(P0 - m c Xi)/(2 kappa))
HopfPresentation make_poincare_kappa_ext() {
    Scalar k = sp(Params::kappa), m = sp(Params::m), c = sp(Params::c);
    Builder b;
    b.grouplike("F", {{"P0", Scalar(-1) / (Scalar(2) * k)}, {"Xi", m * c / (Scalar(2) * k)}});
    for (int i = 1; i <= 3; ++i) b.gen(idx("P", i), GenClass::translation, "1/length");
    b.gen("P0", GenClass::translation, "1/length");
    b.gen("Xi", GenClass::central, "1/action");
    for (int i = 1; i <= 3; ++i) b.gen(idx("M", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("N", i), GenClass::boost);

    rotation_sector(b, "M", {"P", "N"});
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l)) b.bracket1(idx("N", i), idx("N", j), Scalar(-e), idx("M", l));
    for (int i = 1; i <= 3; ++i) b.bracket1(idx("N", i), "P0", Scalar(1), idx("P", i));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::vector<RawTerm> terms;
            if (i == j) {
                terms.push_back({k / Scalar(2), {}});
                terms.push_back({-k / Scalar(2), b.w({{"F", 4}})});
                for (int l = 1; l <= 3; ++l)
                    terms.push_back({Scalar(1) / (Scalar(2) * k), b.w({{idx("P", l).c_str(), 2}})});
            }
            Scalar cij = Scalar(-1) / k;
            if (i == j)
                terms.push_back({cij, b.w({{idx("P", i).c_str(), 2}})});
            else
                terms.push_back({cij, b.w({{idx("P", std::min(i, j)).c_str(), 1},
                                           {idx("P", std::max(i, j)).c_str(), 1}})});
            b.bracket(idx("N", i), idx("P", j), std::move(terms));
        }

    for (int i = 1; i <= 3; ++i) {
        b.cop_entry(idx("P", i), {{Scalar(1), {b.w({{idx("P", i).c_str(), 1}}), {}}},
                                  {Scalar(1), {b.w({{"F", 2}}), b.w({{idx("P", i).c_str(), 1}})}}});
        std::vector<std::pair<Scalar, std::pair<Word, Word>>> dn = {
            {Scalar(1), {b.w({{idx("N", i).c_str(), 1}}), {}}},
            {Scalar(1), {b.w({{"F", 2}}), b.w({{idx("N", i).c_str(), 1}})}}};
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l))
                    dn.push_back({Scalar(e) / k,
                                  {b.w({{idx("P", j).c_str(), 1}}), b.w({{idx("M", l).c_str(), 1}})}});
        b.cop_entry(idx("N", i), dn);
    }

    minus_antipodes(b, {"P0", "Xi", "M1", "M2", "M3"});
    for (int i = 1; i <= 3; ++i)
        b.anti(idx("P", i), {{Scalar(-1), b.w({{"F", -2}, {idx("P", i).c_str(), 1}})}});
    for (int i = 1; i <= 3; ++i) {
        std::vector<RawTerm> st = {{Scalar(-1), b.w({{"F", -2}, {idx("N", i).c_str(), 1}})}};
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l))
                    st.push_back({Scalar(e) / k,
                                  b.w({{"F", -2}, {idx("P", j).c_str(), 1}, {idx("M", l).c_str(), 1}})});
        b.anti(idx("N", i), st);
    }
    return b.build("poincare-kappa-ext");
}

// U(Xi) extended by its group-like carrier G = exp(m c Xi/(2 kappa))
HopfPresentation make_u_xi() {
    Scalar k = sp(Params::kappa), m = sp(Params::m), c = sp(Params::c);
    Builder b;
    b.grouplike("G", {{"Xi", m * c / (Scalar(2) * k)}});
    b.gen("Xi", GenClass::central, "1/action");
    minus_antipodes(b, {"Xi"});
    return b.build("u-xi");
}

// deformed extended Galilei Hopf algebra; G = exp(m Xi/(2 kappa_hat))
HopfPresentation make_galilei_ext_kappa_hat() {
    Scalar kh = sp(Params::kappa_hat), m = sp(Params::m);
    Builder b;
    b.grouplike("G", {{"Xi", m / (Scalar(2) * kh)}});
    for (int i = 1; i <= 3; ++i) b.gen(idx("X", i), GenClass::translation);
    b.gen("Xt", GenClass::translation);
    b.gen("Xi", GenClass::central, "1/action");
    for (int i = 1; i <= 3; ++i) b.gen(idx("J", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("V", i), GenClass::boost);

    rotation_sector(b, "J", {"X", "V"});
    for (int i = 1; i <= 3; ++i) b.bracket1(idx("V", i), "Xt", Scalar(1), idx("X", i));
    for (int i = 1; i <= 3; ++i)
        b.bracket(idx("V", i), idx("X", i),
                  {{kh / Scalar(2), {}}, {-kh / Scalar(2), b.w({{"G", 4}})}});

    for (int i = 1; i <= 3; ++i) {
        b.cop_entry(idx("X", i), {{Scalar(1), {b.w({{idx("X", i).c_str(), 1}}), {}}},
                                  {Scalar(1), {b.w({{"G", 2}}), b.w({{idx("X", i).c_str(), 1}})}}});
        b.cop_entry(idx("V", i), {{Scalar(1), {b.w({{idx("V", i).c_str(), 1}}), {}}},
                                  {Scalar(1), {b.w({{"G", 2}}), b.w({{idx("V", i).c_str(), 1}})}}});
    }
    minus_antipodes(b, {"Xt", "Xi", "J1", "J2", "J3"});
    for (int i = 1; i <= 3; ++i) {
        b.anti(idx("X", i), {{Scalar(-1), b.w({{"G", -2}, {idx("X", i).c_str(), 1}})}});
        b.anti(idx("V", i), {{Scalar(-1), b.w({{"G", -2}, {idx("V", i).c_str(), 1}})}});
    }
    return b.build("galilei-ext-kappa-hat");
}

// deformed kappa_tilde-Galilei algebra; F = exp(-Xt/(2 kappa_tilde))
HopfPresentation make_galilei_kappa_tilde() {
    Scalar kt = sp(Params::kappa_tilde);
    Builder b;
    b.grouplike("F", {{"Xt", Scalar(-1) / (Scalar(2) * kt)}});
    for (int i = 1; i <= 3; ++i) b.gen(idx("X", i), GenClass::translation);
    b.gen("Xt", GenClass::translation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("J", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("V", i), GenClass::boost);

    rotation_sector(b, "J", {"X", "V"});
    for (int i = 1; i <= 3; ++i) b.bracket1(idx("V", i), "Xt", Scalar(1), idx("X", i));
    // [V_i, X_j] = delta_ij X^2/(2 kt) - X_i X_j / kt
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::vector<RawTerm> terms;
            if (i == j)
                for (int l = 1; l <= 3; ++l)
                    terms.push_back({Scalar(1) / (Scalar(2) * kt), b.w({{idx("X", l).c_str(), 2}})});
            Scalar cij = Scalar(-1) / kt;
            if (i == j)
                terms.push_back({cij, b.w({{idx("X", i).c_str(), 2}})});
            else
                terms.push_back({cij, b.w({{idx("X", std::min(i, j)).c_str(), 1},
                                           {idx("X", std::max(i, j)).c_str(), 1}})});
            b.bracket(idx("V", i), idx("X", j), std::move(terms));
        }

    for (int i = 1; i <= 3; ++i) {
        b.cop_entry(idx("X", i), {{Scalar(1), {b.w({{idx("X", i).c_str(), 1}}), {}}},
                                  {Scalar(1), {b.w({{"F", 2}}), b.w({{idx("X", i).c_str(), 1}})}}});
        std::vector<std::pair<Scalar, std::pair<Word, Word>>> dv = {
            {Scalar(1), {b.w({{idx("V", i).c_str(), 1}}), {}}},
            {Scalar(1), {b.w({{"F", 2}}), b.w({{idx("V", i).c_str(), 1}})}}};
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l))
                    dv.push_back({Scalar(e) / kt,
                                  {b.w({{idx("X", j).c_str(), 1}}), b.w({{idx("J", l).c_str(), 1}})}});
        b.cop_entry(idx("V", i), dv);
    }

    minus_antipodes(b, {"Xt", "J1", "J2", "J3"});
    for (int i = 1; i <= 3; ++i)
        b.anti(idx("X", i), {{Scalar(-1), b.w({{"F", -2}, {idx("X", i).c_str(), 1}})}});
    for (int i = 1; i <= 3; ++i) {
        std::vector<RawTerm> st = {{Scalar(-1), b.w({{"F", -2}, {idx("V", i).c_str(), 1}})}};
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l))
                    st.push_back({Scalar(e) / kt,
                                  b.w({{"F", -2}, {idx("X", j).c_str(), 1}, {idx("J", l).c_str(), 1}})});
        b.anti(idx("V", i), st);
    }
    return b.build("galilei-kappa-tilde");
}

HopfPresentation make_rot_boost_classical() {
    Builder b;
    for (int i = 1; i <= 3; ++i) b.gen(idx("J", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("V", i), GenClass::boost);
    rotation_sector(b, "J", {"V"});
    minus_antipodes(b, {"J1", "J2", "J3", "V1", "V2", "V3"});
    return b.build("rot-boost-classical");
}

HopfPresentation make_trans3() {
    Builder b;
    for (int i = 1; i <= 3; ++i) b.gen(idx("P", i), GenClass::translation, "1/length");
    minus_antipodes(b, {"P1", "P2", "P3"});
    return b.build("trans3");
}

HopfPresentation make_trans0() {
    Scalar k = sp(Params::kappa);
    Builder b;
    b.grouplike("F", {{"P0", Scalar(-1) / (Scalar(2) * k)}});
    b.gen("P0", GenClass::translation, "1/length");
    minus_antipodes(b, {"P0"});
    return b.build("trans0");
}

HopfPresentation make_poincare_classical() {
    Builder b;
    for (int i = 1; i <= 3; ++i) b.gen(idx("P", i), GenClass::translation, "1/length");
    b.gen("P0", GenClass::translation, "1/length");
    for (int i = 1; i <= 3; ++i) b.gen(idx("M", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("N", i), GenClass::boost);
    rotation_sector(b, "M", {"P", "N"});
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                if (int e = eps3(i, j, l)) b.bracket1(idx("N", i), idx("N", j), Scalar(-e), idx("M", l));
    for (int i = 1; i <= 3; ++i) {
        b.bracket1(idx("N", i), "P0", Scalar(1), idx("P", i));
        b.bracket1(idx("N", i), idx("P", i), Scalar(1), "P0");
    }
    minus_antipodes(b, {"P1", "P2", "P3", "P0", "M1", "M2", "M3", "N1", "N2", "N3"});
    return b.build("poincare-classical");
}

HopfPresentation make_galilei_classical() {
    Builder b;
    for (int i = 1; i <= 3; ++i) b.gen(idx("X", i), GenClass::translation);
    b.gen("Xt", GenClass::translation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("J", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("V", i), GenClass::boost);
    rotation_sector(b, "J", {"X", "V"});
    for (int i = 1; i <= 3; ++i) b.bracket1(idx("V", i), "Xt", Scalar(1), idx("X", i));
    minus_antipodes(b, {"X1", "X2", "X3", "Xt", "J1", "J2", "J3", "V1", "V2", "V3"});
    return b.build("galilei-classical");
}

HopfPresentation make_galilei_ext_classical() {
    Scalar m = sp(Params::m);
    Builder b;
    for (int i = 1; i <= 3; ++i) b.gen(idx("X", i), GenClass::translation);
    b.gen("Xt", GenClass::translation);
    b.gen("Xi", GenClass::central, "1/action");
    for (int i = 1; i <= 3; ++i) b.gen(idx("J", i), GenClass::rotation);
    for (int i = 1; i <= 3; ++i) b.gen(idx("V", i), GenClass::boost);
    rotation_sector(b, "J", {"X", "V"});
    for (int i = 1; i <= 3; ++i) {
        b.bracket1(idx("V", i), "Xt", Scalar(1), idx("X", i));
        b.bracket1(idx("V", i), idx("X", i), -m, "Xi");
    }
    minus_antipodes(b, {"X1", "X2", "X3", "Xt", "Xi", "J1", "J2", "J3", "V1", "V2", "V3"});
    return b.build("galilei-ext-classical");
}

struct RegistryStore {
    std::mutex mu;
    std::map<std::string, HopfPresentation> built;
    std::map<std::string, std::function<HopfPresentation()>> makers;

    RegistryStore() {
        makers = {
            {"poincare-kappa", make_poincare_kappa},
            {"trans-kappa", make_trans_kappa},
            {"lorentz-classical", make_lorentz_classical},
            {"poincare-kappa-ext", make_poincare_kappa_ext},
            {"u-xi", make_u_xi},
            {"galilei-ext-kappa-hat", make_galilei_ext_kappa_hat},
            {"galilei-kappa-tilde", make_galilei_kappa_tilde},
            {"rot-boost-classical", make_rot_boost_classical},
            {"trans3", make_trans3},
            {"trans0", make_trans0},
            {"poincare-classical", make_poincare_classical},
            {"galilei-classical", make_galilei_classical},
            {"galilei-ext-classical", make_galilei_ext_classical},
        };
    }
};

RegistryStore& store() {
    static RegistryStore s;
    return s;
}

} // namespace

const HopfPresentation& registry_get(const std::string& name) {
    auto& s = store();
    std::lock_guard<std::mutex> lk(s.mu);
    auto it = s.built.find(name);
    if (it != s.built.end()) return it->second;
    auto mk = s.makers.find(name);
    if (mk == s.makers.end()) throw error(errc::unknown_algebra, "unknown algebra: " + name);
    auto [pos, ok] = s.built.emplace(name, mk->second());
    return pos->second;
}

std::vector<std::string> registry_names() {
    auto& s = store();
    std::lock_guard<std::mutex> lk(s.mu);
    std::vector<std::string> out;
    for (auto& [n, mk] : s.makers) out.push_back(n);
    return out;
}

} // namespace kappa

#include "kappa/hopf.hpp"

#include <random>
#include <sstream>

namespace kappa {

namespace {

TensorElem tensor_unit(const Scalar& c = Scalar(1), int rank = 2) {
    TensorElem t(rank);
    t.add(std::vector<Word>((size_t)rank), c);
    return t;
}

} // namespace

const TensorElem& HopfPresentation::cop(GenId g) const {
    auto it = coproduct.find(g);
    if (it == coproduct.end())
        throw error(errc::validation, "missing coproduct for " + alg.gen(g).name + " in " + name);
    return it->second;
}

const NcPoly& HopfPresentation::anti(GenId g) const {
    auto it = antipode.find(g);
    if (it == antipode.end())
        throw error(errc::validation, "missing antipode for " + alg.gen(g).name + " in " + name);
    return it->second;
}

Scalar HopfPresentation::eps(GenId g) const {
    auto it = counit.find(g);
    return it == counit.end() ? Scalar(0) : it->second;
}

HopfPresentation build_hopf(std::string name,
                            std::vector<Generator> gens,
                            std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets,
                            std::map<std::string, TensorElem> coproducts,
                            std::map<std::string, Scalar> counits,
                            std::map<std::string, NcPoly> antipodes) {
    HopfPresentation H;
    H.name = name;
    H.alg = Algebra::build(std::move(name), std::move(gens), std::move(brackets));

    for (GenId g = 0; g < H.alg.size(); ++g) {
        const Generator& gen = H.alg.gen(g);
        if (gen.kind == GenKind::grouplike) {
            if (coproducts.count(gen.name) || antipodes.count(gen.name))
                throw error(errc::validation,
                            "group-like generator " + gen.name + " carries fixed structure tables");
            continue;
        }
        auto ci = coproducts.find(gen.name);
        if (ci != coproducts.end()) {
            H.coproduct.emplace(g, ci->second);
            coproducts.erase(ci);
        } else {
            TensorElem t(2);
            t.add({Word{{g, 1}}, Word{}}, Scalar(1));
            t.add({Word{}, Word{{g, 1}}}, Scalar(1));
            H.coproduct.emplace(g, std::move(t));
        }
        auto ei = counits.find(gen.name);
        if (ei != counits.end()) {
            H.counit.emplace(g, ei->second);
            counits.erase(ei);
        }
        auto ai = antipodes.find(gen.name);
        if (ai == antipodes.end())
            throw error(errc::validation, "missing antipode entry for generator " + gen.name);
        H.antipode.emplace(g, ai->second);
        antipodes.erase(ai);
    }
    if (!coproducts.empty())
        throw error(errc::validation, "coproduct entry for unknown generator " + coproducts.begin()->first);
    if (!antipodes.empty())
        throw error(errc::validation, "antipode entry for unknown generator " + antipodes.begin()->first);
    if (!counits.empty())
        throw error(errc::validation, "counit entry for unknown generator " + counits.begin()->first);

    // all table entries must already be normal-ordered
    for (auto& [g, t] : H.coproduct) {
        std::vector<std::pair<Scalar, std::vector<std::vector<Factor>>>> raw;
        for (auto& [slots, c] : t.terms())
            raw.push_back({c, {slots[0], slots[1]}});
        if (!(H.alg.tensor_nf(2, raw) == t))
            throw error(errc::validation, "coproduct entry not in normal form for " + H.alg.gen(g).name);
    }
    for (auto& [g, p] : H.antipode) {
        std::vector<RawTerm> raw;
        for (auto& [w, c] : p.terms()) raw.push_back({c, w});
        if (!(H.alg.normal_form(raw) == p))
            throw error(errc::validation, "antipode entry not in normal form for " + H.alg.gen(g).name);
    }
    return H;
}

TensorElem coproduct_factor(const HopfPresentation& H, const Factor& f) {
    const Generator& g = H.alg.gen(f.gen);
    if (g.kind == GenKind::grouplike) {
        TensorElem t(2);
        t.add({Word{{f.gen, f.exp}}, Word{{f.gen, f.exp}}}, Scalar(1));
        return t;
    }
    if (f.exp < 0) throw error(errc::internal, "negative ordinary power in coproduct");
    TensorElem acc = tensor_unit();
    for (int32_t i = 0; i < f.exp; ++i) acc = H.alg.tensor_mul(acc, H.cop(f.gen));
    return acc;
}

TensorElem coproduct_of(const HopfPresentation& H, const NcPoly& p) {
    TensorElem out(2);
    for (auto& [w, c] : p.terms()) {
        TensorElem acc = tensor_unit(c);
        for (auto& f : w) acc = H.alg.tensor_mul(acc, coproduct_factor(H, f));
        out = out + acc;
    }
    return out;
}

NcPoly antipode_of(const HopfPresentation& H, const NcPoly& p) {
    NcPoly out;
    for (auto& [w, c] : p.terms()) {
        NcPoly acc(c);
        // anti-homomorphism: S(ab) = S(b) S(a)
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Generator& g = H.alg.gen(it->gen);
            NcPoly s;
            if (g.kind == GenKind::grouplike)
                s = H.alg.of_word({{it->gen, (int32_t)-it->exp}});
            else
                s = H.alg.pow(H.anti(it->gen), (uint32_t)it->exp);
            acc = H.alg.mul(acc, s);
        }
        out = out + acc;
    }
    return out;
}

Scalar counit_of(const HopfPresentation& H, const NcPoly& p) {
    Scalar out(0);
    for (auto& [w, c] : p.terms()) {
        Scalar v = c;
        for (auto& f : w) {
            if (H.alg.gen(f.gen).kind == GenKind::grouplike) continue;   // eps(F) = 1
            Scalar e = H.eps(f.gen);
            for (int32_t i = 0; i < f.exp && !v.is_zero(); ++i) v *= e;
        }
        out += v;
    }
    return out;
}

TensorElem coassoc_left(const HopfPresentation& H, const TensorElem& t) {
    // (Delta (x) id)
    TensorElem out(3);
    for (auto& [slots, c] : t.terms()) {
        TensorElem d = tensor_unit(Scalar(1));
        for (auto& f : slots[0]) d = H.alg.tensor_mul(d, coproduct_factor(H, f));
        for (auto& [ds, dc] : d.terms())
            out.add({ds[0], ds[1], slots[1]}, c * dc);
    }
    return out;
}

TensorElem coassoc_right(const HopfPresentation& H, const TensorElem& t) {
    // (id (x) Delta)
    TensorElem out(3);
    for (auto& [slots, c] : t.terms()) {
        TensorElem d = tensor_unit(Scalar(1));
        for (auto& f : slots[1]) d = H.alg.tensor_mul(d, coproduct_factor(H, f));
        for (auto& [ds, dc] : d.terms())
            out.add({slots[0], ds[0], ds[1]}, c * dc);
    }
    return out;
}

CheckReport check_jacobi(const HopfPresentation& H) {
    CheckReport rep{"jacobi(" + H.name + ")", {}};
    const Algebra& A = H.alg;
    for (GenId a = 0; a < A.size(); ++a)
        for (GenId b = (GenId)(a + 1); b < A.size(); ++b)
            for (GenId c = (GenId)(b + 1); c < A.size(); ++c) {
                NcPoly pa = A.of_gen(a), pb = A.of_gen(b), pc = A.of_gen(c);
                NcPoly r = A.bracket(A.bracket(pa, pb), pc) + A.bracket(A.bracket(pb, pc), pa) +
                           A.bracket(A.bracket(pc, pa), pb);
                std::string subj = A.gen(a).name + "," + A.gen(b).name + "," + A.gen(c).name;
                rep.add("jacobi", subj, r.is_zero(), r.is_zero() ? "" : r.to_string(A));
            }
    return rep;
}

namespace {

std::vector<Factor> random_raw_word(const Algebra& A, std::mt19937_64& rng, uint32_t degree) {
    std::uniform_int_distribution<int> gen_pick(0, (int)A.size() - 1);
    std::uniform_int_distribution<int> sign_pick(0, 1);
    std::vector<Factor> w;
    int64_t deg = 0;
    while (deg < (int64_t)degree) {
        GenId g = (GenId)gen_pick(rng);
        if (A.gen(g).kind == GenKind::grouplike) {
            w.push_back({g, sign_pick(rng) ? 1 : -1});
        } else {
            w.push_back({g, 1});
            deg += 1;
        }
        if (w.size() > (size_t)(2 * degree + 2)) break;
    }
    return w;
}

} // namespace

CheckReport check_hopf_axioms(const HopfPresentation& H, uint32_t max_degree, uint64_t seed) {
    if (max_degree < 2) throw error(errc::validation, "check_hopf_axioms requires max_degree >= 2");
    CheckReport rep{"hopf-axioms(" + H.name + ")", {}};
    const Algebra& A = H.alg;

    auto run_word = [&](const std::vector<Factor>& raw, const std::string& subj) {
        NcPoly p = A.of_word(raw);
        // (i) Delta is an algebra map: coproduct of the normal form equals the
        // componentwise product of the letter coproducts.
        TensorElem lhs = coproduct_of(H, p);
        TensorElem free_side = tensor_unit(Scalar(1));
        for (auto& f : raw) free_side = A.tensor_mul(free_side, coproduct_factor(H, f));
        TensorElem di = lhs - free_side;
        rep.add("delta-homomorphism", subj, di.is_zero(), di.is_zero() ? "" : di.to_string(A));

        // (ii) coassociativity
        TensorElem c3 = coassoc_left(H, lhs) - coassoc_right(H, lhs);
        rep.add("coassociativity", subj, c3.is_zero(), c3.is_zero() ? "" : c3.to_string(A));

        // (iii) counit axiom
        NcPoly left, right;
        for (auto& [slots, c] : lhs.terms()) {
            left = left + A.of_word(slots[1], c * counit_of(H, A.of_word(slots[0])));
            right = right + A.of_word(slots[0], c * counit_of(H, A.of_word(slots[1])));
        }
        NcPoly ce = (left - p) + (right - p);
        rep.add("counit", subj, ce.is_zero(), ce.is_zero() ? "" : ce.to_string(A));

        // (iv) antipode axiom
        Scalar e = counit_of(H, p);
        NcPoly m1, m2;
        for (auto& [slots, c] : lhs.terms()) {
            m1 = m1 + A.mul(antipode_of(H, A.of_word(slots[0])), A.of_word(slots[1])).scaled(c);
            m2 = m2 + A.mul(A.of_word(slots[0]), antipode_of(H, A.of_word(slots[1]))).scaled(c);
        }
        NcPoly ae = (m1 - NcPoly(e)) + (m2 - NcPoly(e));
        rep.add("antipode", subj, ae.is_zero(), ae.is_zero() ? "" : ae.to_string(A));
    };

    for (GenId g = 0; g < A.size(); ++g)
        run_word({{g, 1}}, A.gen(g).name);

    std::mt19937_64 rng(seed);
    for (uint32_t d = 2; d <= max_degree; ++d)
        for (int s = 0; s < 4; ++s) {
            auto raw = random_raw_word(A, rng, d);
            std::ostringstream subj;
            subj << "word";
            for (auto& f : raw)
                subj << " " << A.gen(f.gen).name << (f.exp != 1 ? "^" + std::to_string(f.exp) : "");
            run_word(raw, subj.str());
        }
    return rep;
}

CheckReport centrality_check(const NcPoly& candidate, const HopfPresentation& H) {
    CheckReport rep{"centrality(" + H.name + ")", {}};
    for (GenId g = 0; g < H.alg.size(); ++g) {
        NcPoly r = H.alg.bracket(candidate, H.alg.of_gen(g));
        rep.add("central", H.alg.gen(g).name, r.is_zero(), r.is_zero() ? "" : r.to_string(H.alg));
    }
    return rep;
}

namespace {

NcPoly subst_poly(const NcPoly& p, const std::map<ParamId, Scalar>& b) {
    NcPoly out;
    for (auto& [w, c] : p.terms()) out.add(w, c.substitute(b));
    return out;
}

TensorElem subst_tensor(const TensorElem& t, const std::map<ParamId, Scalar>& b) {
    TensorElem out(t.rank());
    for (auto& [s, c] : t.terms()) out.add(s, c.substitute(b));
    return out;
}

} // namespace

HopfPresentation substitute_params(const HopfPresentation& H, const std::map<ParamId, Scalar>& bindings,
                                   std::string new_name) {
    std::vector<Generator> gens = H.alg.gens();
    for (auto& g : gens)
        for (auto& [prim, rate] : g.exponent.terms) rate = rate.substitute(bindings);

    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    for (GenId hi = 0; hi < H.alg.size(); ++hi)
        for (GenId lo = 0; lo < hi; ++lo) {
            const NcPoly& r = H.alg.remainder(hi, lo);
            if (r.is_zero()) continue;
            std::vector<RawTerm> raw;
            for (auto& [w, c] : r.terms()) raw.push_back({c.substitute(bindings), w});
            brackets.emplace(std::make_pair(H.alg.gen(hi).name, H.alg.gen(lo).name), std::move(raw));
        }

    std::map<std::string, TensorElem> cops;
    std::map<std::string, Scalar> eps;
    std::map<std::string, NcPoly> anti;
    for (auto& [g, t] : H.coproduct) cops.emplace(H.alg.gen(g).name, subst_tensor(t, bindings));
    for (auto& [g, s] : H.counit) eps.emplace(H.alg.gen(g).name, s.substitute(bindings));
    for (auto& [g, p] : H.antipode) anti.emplace(H.alg.gen(g).name, subst_poly(p, bindings));
    return build_hopf(std::move(new_name), std::move(gens), std::move(brackets), std::move(cops),
                      std::move(eps), std::move(anti));
}

HopfPresentation rename_generators(const HopfPresentation& H, const std::map<std::string, std::string>& names,
                                   std::string new_name) {
    auto rn = [&](const std::string& n) {
        auto it = names.find(n);
        return it == names.end() ? n : it->second;
    };
    std::vector<Generator> gens = H.alg.gens();
    for (auto& g : gens) {
        g.name = rn(g.name);
        for (auto& [prim, rate] : g.exponent.terms) prim = rn(prim);
    }
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    for (GenId hi = 0; hi < H.alg.size(); ++hi)
        for (GenId lo = 0; lo < hi; ++lo) {
            const NcPoly& r = H.alg.remainder(hi, lo);
            if (r.is_zero()) continue;
            std::vector<RawTerm> raw;
            for (auto& [w, c] : r.terms()) raw.push_back({c, w});
            brackets.emplace(std::make_pair(gens[hi].name, gens[lo].name), std::move(raw));
        }
    std::map<std::string, TensorElem> cops;
    std::map<std::string, Scalar> eps;
    std::map<std::string, NcPoly> anti;
    for (auto& [g, t] : H.coproduct) cops.emplace(gens[g].name, t);
    for (auto& [g, s] : H.counit) eps.emplace(gens[g].name, s);
    for (auto& [g, p] : H.antipode) anti.emplace(gens[g].name, p);
    return build_hopf(std::move(new_name), std::move(gens), std::move(brackets), std::move(cops),
                      std::move(eps), std::move(anti));
}

} // namespace kappa

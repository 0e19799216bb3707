#include "kappa/contraction.hpp"

namespace kappa {

namespace {

struct GenScaleResolved {
    std::string new_name;
    int power;
};

GenScaleResolved resolve(const ContractionMap& map, const std::string& name) {
    auto it = map.gens.find(name);
    if (it == map.gens.end()) return {name, 0};
    return {it->second.new_name, it->second.power};
}

// multiply by the limit parameter to an integer power of either sign
Scalar scale_pow(Scalar s, ParamId p, int k) {
    for (int i = 0; i < k; ++i) s *= Scalar::param(p);
    for (int i = 0; i < -k; ++i) s = s / Scalar::param(p);
    return s;
}

// substituted coefficient of a mapped word, including the letter scalings
Scalar mapped_coeff(const Algebra& src, const ContractionMap& map, const Word& w, const Scalar& c) {
    Scalar out = c.substitute(map.params);
    int total = 0;
    for (auto& f : w)
        if (src.gen(f.gen).kind == GenKind::ordinary) total += resolve(map, src.gen(f.gen).name).power * f.exp;
    return scale_pow(out, map.limit_param, total);
}

Scalar take_limit(const Scalar& s, ParamId p, const std::string& what) {
    auto l = s.limit_at_infinity(p);
    if (!l)
        throw error(errc::divergent_structure_constant,
                    "divergent structure constant in " + what + ": " + s.to_string());
    return *l;
}

} // namespace

HopfPresentation apply_contraction(const HopfPresentation& H, const ContractionMap& map,
                                   std::string new_name) {
    const Algebra& A = H.alg;
    ParamId cp = map.limit_param;

    std::vector<Generator> gens;
    for (auto& g : A.gens()) {
        Generator ng = g;
        ng.name = resolve(map, g.name).new_name;
        if (g.kind == GenKind::grouplike) {
            GroupLikeExponent ex;
            for (auto& [prim, rate] : g.exponent.terms) {
                auto rs = resolve(map, prim);
                Scalar r = rate.substitute(map.params);
                for (int i = 0; i < rs.power; ++i) r *= Scalar::param(cp);
                for (int i = 0; i < -rs.power; ++i) r = r / Scalar::param(cp);
                Scalar lim = take_limit(r, cp, "group-like exponent of " + g.name);
                if (!lim.is_zero()) ex.terms.push_back({rs.new_name, lim});
            }
            if (ex.terms.empty())
                throw error(errc::validation,
                            "group-like exponent of " + g.name + " vanished in the contraction");
            ng.exponent = std::move(ex);
        }
        gens.push_back(std::move(ng));
    }

    auto map_word = [&](const Word& w) {
        std::vector<Factor> out;
        for (auto& f : w) out.push_back(f);   // ids are positional, names change only
        return out;
    };

    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    for (GenId hi = 0; hi < A.size(); ++hi)
        for (GenId lo = 0; lo < hi; ++lo) {
            const NcPoly& r = A.remainder(hi, lo);
            if (r.is_zero()) continue;
            std::string tag = "[" + A.gen(hi).name + ", " + A.gen(lo).name + "]";
            int kb = resolve(map, A.gen(hi).name).power;
            int ka = resolve(map, A.gen(lo).name).power;
            std::vector<RawTerm> terms;
            for (auto& [w, c] : r.terms()) {
                Scalar nc = scale_pow(mapped_coeff(A, map, w, c), cp, -(kb + ka));
                nc = take_limit(nc, cp, tag);
                if (!nc.is_zero()) terms.push_back({nc, map_word(w)});
            }
            if (!terms.empty())
                brackets[{gens[hi].name, gens[lo].name}] = std::move(terms);
        }

    std::map<std::string, TensorElem> cops;
    std::map<std::string, Scalar> eps;
    std::map<std::string, NcPoly> antis;
    for (auto& [g, t] : H.coproduct) {
        int kb = resolve(map, A.gen(g).name).power;
        std::string tag = "coproduct of " + A.gen(g).name;
        TensorElem nt(2);
        for (auto& [slots, c] : t.terms()) {
            Scalar nc = c.substitute(map.params);
            int total = 0;
            for (auto& w : slots)
                for (auto& f : w)
                    if (A.gen(f.gen).kind == GenKind::ordinary)
                        total += resolve(map, A.gen(f.gen).name).power * f.exp;
            nc = scale_pow(nc, cp, total - kb);
            nc = take_limit(nc, cp, tag);
            if (!nc.is_zero()) nt.add({map_word(slots[0]), map_word(slots[1])}, nc);
        }
        cops[gens[g].name] = nt;
    }
    for (auto& [g, s] : H.counit)
        eps[gens[g].name] = take_limit(s.substitute(map.params), cp, "counit of " + A.gen(g).name);
    for (auto& [g, p] : H.antipode) {
        int kb = resolve(map, A.gen(g).name).power;
        std::string tag = "antipode of " + A.gen(g).name;
        NcPoly np;
        for (auto& [w, c] : p.terms()) {
            Scalar nc = scale_pow(mapped_coeff(A, map, w, c), cp, -kb);
            nc = take_limit(nc, cp, tag);
            if (!nc.is_zero()) np.add(map_word(w), nc);
        }
        antis[gens[g].name] = np;
    }
    return build_hopf(std::move(new_name), std::move(gens), std::move(brackets), std::move(cops),
                      std::move(eps), std::move(antis));
}

namespace {

// limit of an expanded (group-like-free) polynomial, coefficient-wise
NcPoly limit_poly(const NcPoly& p, ParamId param, const std::string& tag) {
    NcPoly out;
    for (auto& [w, c] : p.terms()) {
        Scalar l = take_limit(c, param, tag);
        if (!l.is_zero()) out.add(w, l);
    }
    return out;
}

// expanded-then-limited value, with the order raised until stable
NcPoly stable_limit(const Algebra& A, const NcPoly& p, ParamId param, uint32_t order,
                    const std::string& tag) {
    NcPoly prev = limit_poly(A.expand_grouplike(p, order), param, tag);
    for (uint32_t o = order + 1; o <= order + 6; ++o) {
        NcPoly cur = limit_poly(A.expand_grouplike(p, o), param, tag);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw error(errc::validation, "classical limit did not stabilize for " + tag);
}

} // namespace

HopfPresentation classical_limit(const HopfPresentation& H, ParamId param, uint32_t order,
                                 std::string new_name) {
    if (order < 2) throw error(errc::validation, "classical_limit requires order >= 2");
    const Algebra& A = H.alg;

    // the group-like carriers disappear; ordinary generators survive
    std::vector<Generator> gens;
    std::map<GenId, GenId> newid;
    for (GenId g = 0; g < A.size(); ++g) {
        if (A.gen(g).kind == GenKind::grouplike) continue;
        newid[g] = (GenId)gens.size();
        gens.push_back(A.gen(g));
    }
    auto map_poly = [&](const NcPoly& p) {
        NcPoly out;
        for (auto& [w, c] : p.terms()) {
            Word nw;
            for (auto& f : w) nw.push_back({newid.at(f.gen), f.exp});
            out.add(nw, c);
        }
        return out;
    };

    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    for (GenId hi = 0; hi < A.size(); ++hi)
        for (GenId lo = 0; lo < hi; ++lo) {
            if (A.gen(hi).kind == GenKind::grouplike || A.gen(lo).kind == GenKind::grouplike)
                continue;
            const NcPoly& r = A.remainder(hi, lo);
            if (r.is_zero()) continue;
            std::string tag = "[" + A.gen(hi).name + ", " + A.gen(lo).name + "]";
            NcPoly lim = map_poly(stable_limit(A, r, param, order, tag));
            for (auto& [w, c] : lim.terms())
                if (w.size() > 1 || (w.size() == 1 && w[0].exp > 1))
                    throw error(errc::validation,
                                "classical limit of " + tag + " is not Lie-type: " +
                                    lim.to_string(A));
            std::vector<RawTerm> terms;
            for (auto& [w, c] : lim.terms()) terms.push_back({c, w});
            if (!terms.empty()) brackets[{A.gen(hi).name, A.gen(lo).name}] = std::move(terms);
        }

    std::map<std::string, TensorElem> cops;
    std::map<std::string, Scalar> eps;
    std::map<std::string, NcPoly> antis;
    for (auto& [g, t] : H.coproduct) {
        std::string tag = "coproduct of " + A.gen(g).name;
        TensorElem nt(2);
        for (auto& [slots, c] : t.terms()) {
            NcPoly e0 = stable_limit(A, A.of_word(slots[0], c), param, order, tag);
            NcPoly e1 = stable_limit(A, A.of_word(slots[1]), param, order, tag);
            NcPoly m0 = map_poly(e0), m1 = map_poly(e1);
            for (auto& [w0, c0] : m0.terms())
                for (auto& [w1, c1] : m1.terms()) nt.add({w0, w1}, c0 * c1);
        }
        // the limit must be primitive
        TensorElem prim(2);
        GenId ng = newid.at(g);
        prim.add({Word{{ng, 1}}, Word{}}, Scalar(1));
        prim.add({Word{}, Word{{ng, 1}}}, Scalar(1));
        if (!(nt == prim))
            throw error(errc::validation, tag + " does not become primitive in the limit");
        cops[gens[newid.at(g)].name] = nt;
    }
    for (auto& [g, s] : H.counit) eps[gens[newid.at(g)].name] = take_limit(s, param, "counit");
    for (auto& [g, p] : H.antipode) {
        std::string tag = "antipode of " + A.gen(g).name;
        antis[gens[newid.at(g)].name] = map_poly(stable_limit(A, p, param, order, tag));
    }
    return build_hopf(std::move(new_name), std::move(gens), std::move(brackets), std::move(cops),
                      std::move(eps), std::move(antis));
}

NcPoly contract_element(const Algebra& src, const NcPoly& e, const ContractionMap& map,
                        const Scalar& rescale, const Algebra& dst) {
    if (rescale.is_zero()) throw error(errc::validation, "zero overall rescale");
    NcPoly out;
    for (auto& [w, c] : e.terms()) {
        Scalar nc = mapped_coeff(src, map, w, c) * rescale.substitute(map.params);
        nc = take_limit(nc, map.limit_param, "element contraction");
        if (nc.is_zero()) continue;
        std::vector<Factor> nw;
        for (auto& f : w) nw.push_back({dst.gen_id(resolve(map, src.gen(f.gen).name).new_name), f.exp});
        out = out + dst.of_word(nw, nc);
    }
    return out;
}

NcPoly classical_limit_element(const Algebra& src, const NcPoly& e, ParamId param, uint32_t order,
                               const Algebra& dst) {
    NcPoly lim = stable_limit(src, e, param, order, "element limit");
    NcPoly out;
    for (auto& [w, c] : lim.terms()) {
        std::vector<Factor> nw;
        for (auto& f : w) nw.push_back({dst.gen_id(src.gen(f.gen).name), f.exp});
        out = out + dst.of_word(nw, c);
    }
    return out;
}

CheckReport check_diagram(const AlgebraSquare& spec) {
    CheckReport rep{"diagram(" + spec.start->name + ")", {}};
    HopfPresentation right = apply_contraction(*spec.start, spec.horizontal, spec.start->name + "-contracted");
    HopfPresentation left = classical_limit(*spec.start, spec.vertical_param, spec.order,
                                            spec.start->name + "-classical");
    HopfPresentation br1 = classical_limit(right, spec.vertical_param, spec.order,
                                           right.name + "-classical");
    HopfPresentation br2 = apply_contraction(left, spec.horizontal, left.name + "-contracted");

    auto cmp = compare_presentations(br1, br2, {});
    bool ok = cmp.pass();
    rep.add("square-commutes", spec.start->name, ok,
            ok ? "" : std::to_string(cmp.checks.failures()) + " corner residuals");

    if (spec.expect_right) {
        auto c2 = compare_presentations(right, *spec.expect_right, {});
        rep.add("right-corner", spec.expect_right->name, c2.pass(),
                c2.pass() ? "" : std::to_string(c2.checks.failures()) + " residuals");
    }
    if (spec.expect_bottom) {
        auto c3 = compare_presentations(br1, *spec.expect_bottom, {});
        rep.add("bottom-corner", spec.expect_bottom->name, c3.pass(),
                c3.pass() ? "" : std::to_string(c3.checks.failures()) + " residuals");
    }
    return rep;
}

CommutatorTable contract_table(const CalculusProblem& src, const CommutatorTable& t,
                               const std::map<std::string, GenScale>& coord_map,
                               const std::map<std::string, GenScale>& form_map,
                               const std::map<ParamId, Scalar>& params, ParamId limit,
                               const CalculusProblem& dst) {
    auto cpow = [&](int k) {
        Scalar s(1);
        for (int i = 0; i < k; ++i) s *= Scalar::param(limit);
        for (int i = 0; i < -k; ++i) s = s / Scalar::param(limit);
        return s;
    };
    auto rc = [&](const std::string& n) -> GenScaleResolved {
        auto it = coord_map.find(n);
        if (it == coord_map.end()) return {n, 0};
        return {it->second.new_name, it->second.power};
    };
    auto rf = [&](const std::string& n) -> GenScaleResolved {
        auto it = form_map.find(n);
        if (it == form_map.end()) return {n, 0};
        return {it->second.new_name, it->second.power};
    };
    CommutatorTable out;
    for (auto& [key, v] : t) {
        auto& [mu, a, b] = key;
        auto rmu = rc(src.coords.gen(mu).name);
        auto ra = rf(src.forms.names[a]);
        auto rb = rf(src.forms.names[b]);
        Scalar nc = v.substitute(params) * cpow(rb.power - rmu.power - ra.power);
        auto lim = nc.limit_at_infinity(limit);
        if (!lim)
            throw error(errc::divergent_structure_constant,
                        "divergent calculus entry [" + src.coords.gen(mu).name + ", " +
                            src.forms.names[a] + "]");
        if (lim->is_zero()) continue;
        out[{dst.coords.gen_id(rmu.new_name), dst.forms.index_of(ra.new_name),
             dst.forms.index_of(rb.new_name)}] = *lim;
    }
    return out;
}

CommutatorTable limit_table(const CommutatorTable& t, ParamId param) {
    CommutatorTable out;
    for (auto& [key, v] : t) {
        auto lim = v.limit_at_infinity(param);
        if (!lim) throw error(errc::divergent_structure_constant, "divergent calculus entry");
        if (!lim->is_zero()) out[key] = *lim;
    }
    return out;
}

} // namespace kappa

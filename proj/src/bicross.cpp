#include "kappa/bicross.hpp"

#include <algorithm>
#include <sstream>

namespace kappa {

// ---------------------------------------------------------------- MTensor

void MTensor::add(const std::vector<Word>& ws, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(ws);
    if (it == terms.end()) {
        terms.emplace(ws, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MTensor MTensor::operator+(const MTensor& o) const {
    MTensor r = *this;
    for (auto& [w, c] : o.terms) r.add(w, c);
    return r;
}

MTensor MTensor::operator-(const MTensor& o) const {
    MTensor r = *this;
    for (auto& [w, c] : o.terms) r.add(w, -c);
    return r;
}

std::string MTensor::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [ws, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (size_t i = 0; i < ws.size(); ++i) {
            os << (i ? " (x) " : " ");
            if (slots.size() == ws.size() && slots[i])
                os << (ws[i].empty() ? "1" : slots[i]->word_to_string(ws[i]));
            else
                os << "<word>";
        }
    }
    return os.str();
}

namespace {

// rank-n iterated coproduct of an H word; all slots live in H
MTensor delta_h(const HopfPresentation& H, const Word& w, int n) {
    MTensor out(std::vector<const Algebra*>((size_t)n, &H.alg));
    if (n == 1) {
        out.add({w}, Scalar(1));
        return out;
    }
    MTensor prev = delta_h(H, w, n - 1);
    for (auto& [ws, c] : prev.terms) {
        TensorElem d = coproduct_of(H, H.alg.of_word(ws.back()));
        for (auto& [ds, dc] : d.terms()) {
            std::vector<Word> nw(ws.begin(), ws.end() - 1);
            nw.push_back(ds[0]);
            nw.push_back(ds[1]);
            out.add(nw, c * dc);
        }
    }
    return out;
}

NcPoly act_letter(const BicrossData& D, const Factor& f, GenId h);
NcPoly act_word(const BicrossData& D, const Word& w, GenId h);

// single A letter acted by a single ordinary H generator
NcPoly act_letter(const BicrossData& D, const Factor& f, GenId h) {
    const Algebra& A = D.A.alg;
    const Generator& g = A.gen(f.gen);
    if (g.kind == GenKind::ordinary) {
        auto it = D.action.find({f.gen, h});
        return it == D.action.end() ? NcPoly() : it->second;
    }
    // exp(kX) <| h = eps(h) exp(kX) + k exp(kX) (X <| h); needs primitive h
    for (auto& [slots, c] : D.H.cop(h).terms())
        if (!(slots[0].empty() || slots[1].empty()))
            throw error(errc::validation,
                        "action of a non-primitive generator on a group-like element is unsupported");
    NcPoly xh;
    for (auto& [prim, rate] : g.exponent.terms) {
        auto it = D.action.find({A.gen_id(prim), h});
        if (it != D.action.end()) xh = xh + it->second.scaled(rate);
    }
    NcPoly out = A.of_word({f}).scaled(D.H.eps(h));
    return out + A.mul(A.of_word({f}), xh).scaled(Scalar(f.exp));
}

// single A word acted by a single ordinary H generator
NcPoly act_word(const BicrossData& D, const Word& w, GenId h) {
    const Algebra& A = D.A.alg;
    if (D.alpha_trivial) return A.of_word(w).scaled(D.H.eps(h));
    if (w.empty()) return NcPoly(D.H.eps(h));
    bool atomic = w.size() == 1 &&
                  (w[0].exp == 1 || A.gen(w[0].gen).kind == GenKind::grouplike);
    if (atomic) return act_letter(D, w[0], h);
    // split one unit off the front and distribute through Delta_H(h)
    Factor first = w[0];
    Word rest = w;
    if (A.gen(first.gen).kind == GenKind::grouplike) {
        rest.erase(rest.begin());
    } else {
        first.exp = 1;
        if (w[0].exp > 1)
            rest[0].exp -= 1;
        else
            rest.erase(rest.begin());
    }
    NcPoly out;
    for (auto& [slots, c] : D.H.cop(h).terms()) {
        NcPoly left = act_right(D, A.of_word({first}), slots[0]);
        NcPoly right = act_right(D, A.of_word(rest), slots[1]);
        out = out + A.mul(left, right).scaled(c);
    }
    return out;
}

NcPoly act_gen(const BicrossData& D, const NcPoly& a, GenId h) {
    NcPoly out;
    for (auto& [w, c] : a.terms()) out = out + act_word(D, w, h).scaled(c);
    return out;
}

NcPoly act_genpow(const BicrossData& D, const NcPoly& a, const Factor& f) {
    if (D.H.alg.gen(f.gen).kind == GenKind::grouplike) {
        if (D.alpha_trivial) return a;   // counit of a group-like is 1
        throw error(errc::validation,
                    "right action by a group-like of the acting algebra is unsupported");
    }
    NcPoly cur = a;
    for (int32_t i = 0; i < f.exp; ++i) cur = act_gen(D, cur, f.gen);
    return cur;
}

NcPoly act_right_poly(const BicrossData& D, const NcPoly& a, const NcPoly& h) {
    NcPoly out;
    for (auto& [w, c] : h.terms()) out = out + act_right(D, a, w).scaled(c);
    return out;
}

std::vector<GenId> ordinary_gens(const Algebra& A) {
    std::vector<GenId> out;
    for (GenId g = 0; g < A.size(); ++g)
        if (A.gen(g).kind == GenKind::ordinary) out.push_back(g);
    return out;
}

} // namespace

NcPoly act_right(const BicrossData& D, const NcPoly& a, const Word& h) {
    NcPoly cur = a;
    for (auto& f : h) cur = act_genpow(D, cur, f);
    return cur;
}

static MTensor coact_product(const BicrossData& D, GenId h, GenId g);

// ---------------------------------------------------------------- coaction

namespace {

MTensor mt_ah(const BicrossData& D) { return MTensor({&D.A.alg, &D.H.alg}); }

MTensor coact_single(const BicrossData& D, const Factor& f) {
    MTensor out = mt_ah(D);
    const Generator& g = D.H.alg.gen(f.gen);
    if (g.kind == GenKind::grouplike) {
        for (auto& [prim, rate] : g.exponent.terms) {
            GenId p = D.H.alg.gen_id(prim);
            auto it = D.coaction.find(p);
            if (it != D.coaction.end()) {
                MTensor triv = mt_ah(D);
                triv.add({Word{}, Word{{p, 1}}}, Scalar(1));
                if (!(it->second == triv))
                    throw error(errc::validation,
                                "group-like coaction requires trivially coacted exponent generators");
            }
        }
        out.add({Word{}, Word{{f.gen, f.exp}}}, Scalar(1));
        return out;
    }
    if (f.exp != 1) throw error(errc::internal, "coact_single expects a unit exponent");
    auto it = D.coaction.find(f.gen);
    if (it != D.coaction.end()) return it->second;
    out.add({Word{}, Word{{f.gen, 1}}}, Scalar(1));   // trivial coaction by default
    return out;
}

} // namespace

// Coaction extended to words. A trailing group-like just rides along in the
// second slot. An ordinary trailing letter g is handled by the
// cocycle-corrected product-coaction identity, solved for the top term:
//
//   beta(h g) = sum xi(h1 (x) g1) (beta(h2)_A <| g2) beta(g3)_A
//                     (x) beta(h2)_H beta(g3)_H
//             - sum' beta(h1 g1) (xi(h2 (x) g2) (x) 1)
//
// where sum' omits the leading (h1,g1) = (h,g) term; with a trivial cocycle
// this collapses to the familiar product-coaction rule.
MTensor coact(const BicrossData& D, const Word& h) {
    const Algebra& A = D.A.alg;
    const Algebra& Hg = D.H.alg;
    MTensor out = mt_ah(D);
    if (h.empty()) {
        out.add({Word{}, Word{}}, Scalar(1));
        return out;
    }
    bool atomic = h.size() == 1 &&
                  (h[0].exp == 1 || Hg.gen(h[0].gen).kind == GenKind::grouplike);
    if (atomic) return coact_single(D, h[0]);

    Factor last = h.back();
    Word prefix = h;
    if (Hg.gen(last.gen).kind == GenKind::grouplike) {
        prefix.pop_back();
        // beta(h F^k) = (beta(h)_A <| F^k) (x) beta(h)_H F^k
        coact_single(D, last);   // validates the trivially-coacted exponent
        MTensor pref = coact(D, prefix);
        for (auto& [pw, pc] : pref.terms) {
            NcPoly slot1 = act_right(D, A.of_word(pw[0]), {last});
            NcPoly slot2 = Hg.mul(Hg.of_word(pw[1]), Hg.of_word({last}));
            for (auto& [s1, c1] : slot1.terms())
                for (auto& [s2, c2] : slot2.terms()) out.add({s1, s2}, pc * c1 * c2);
        }
        return out;
    }
    last.exp = 1;
    if (h.back().exp > 1)
        prefix.back().exp -= 1;
    else
        prefix.pop_back();

    int64_t my_degree = Hg.ordinary_degree(h);
    TensorElem dh = coproduct_of(D.H, Hg.of_word(prefix));
    MTensor d3g = delta_h(D.H, {last}, 3);
    TensorElem dg = D.H.cop(last.gen);

    // leading formula value
    for (auto& [hs, hc] : dh.terms())
        for (auto& [gs, gc] : d3g.terms) {
            NcPoly xi = cocycle_value(D, hs[0], gs[0]);
            if (xi.is_zero()) continue;
            MTensor bh2 = coact(D, hs[1]);
            for (auto& [bw, bc] : bh2.terms) {
                NcPoly acted = act_right(D, A.of_word(bw[0]), gs[1]);
                MTensor bg3 = coact(D, gs[2]);
                for (auto& [cw, cc] : bg3.terms) {
                    NcPoly s1 = A.mul(A.mul(xi, acted), A.of_word(cw[0]));
                    NcPoly s2 = Hg.mul(Hg.of_word(bw[1]), Hg.of_word(cw[1]));
                    for (auto& [w1, c1] : s1.terms())
                        for (auto& [w2, c2] : s2.terms())
                            out.add({w1, w2}, hc * gc * bc * cc * c1 * c2);
                }
            }
        }

    // subtract the lower products of the expanded left side
    for (auto& [hs, hc] : dh.terms())
        for (auto& [gs, gc] : dg.terms()) {
            bool top = hs[0] == prefix && hs[1].empty() && gs[0] == Word{last} && gs[1].empty();
            if (top) continue;
            NcPoly xi = cocycle_value(D, hs[1], gs[1]);
            if (xi.is_zero()) continue;
            NcPoly prod = Hg.mul(Hg.of_word(hs[0]), Hg.of_word(gs[0]));
            for (auto& [pw2, pc2] : prod.terms()) {
                if (Hg.ordinary_degree(pw2) >= my_degree)
                    throw error(errc::internal,
                                "product-coaction recursion failed to descend on " +
                                    Hg.word_to_string(h) + " via " + Hg.word_to_string(pw2));
                MTensor bp = coact(D, pw2);
                for (auto& [bw, bc] : bp.terms) {
                    NcPoly s1 = A.mul(A.of_word(bw[0]), xi);
                    for (auto& [w1, c1] : s1.terms())
                        out.add({w1, bw[1]}, -(hc * gc * pc2 * bc * c1));
                }
            }
        }
    return out;
}

namespace {

MTensor coact_poly(const BicrossData& D, const NcPoly& p) {
    MTensor out = mt_ah(D);
    for (auto& [w, c] : p.terms()) {
        MTensor t = coact(D, w);
        for (auto& [ws, tc] : t.terms) out.add(ws, tc * c);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- cocycle

// Group-like factors are transparent to the cocycle (their counit is 1 and
// the stored values pair ordinary generators only); after stripping them a
// single-generator pair reads the antisymmetric table, anything else falls
// back to the counit product.
NcPoly cocycle_value(const BicrossData& D, const Word& h, const Word& g) {
    auto strip = [&](const Word& w) {
        Word out;
        for (auto& f : w)
            if (D.H.alg.gen(f.gen).kind == GenKind::ordinary) out.push_back(f);
        return out;
    };
    Word hs = strip(h), gs = strip(g);
    auto single = [](const Word& w) { return w.size() == 1 && w[0].exp == 1; };
    if (single(hs) && single(gs)) {
        auto it = D.cocycle.find({hs[0].gen, gs[0].gen});
        if (it != D.cocycle.end()) return it->second;
        auto rit = D.cocycle.find({gs[0].gen, hs[0].gen});
        if (rit != D.cocycle.end()) return -rit->second;   // antisymmetric
        return NcPoly();
    }
    Scalar e = counit_of(D.H, D.H.alg.of_word(hs)) * counit_of(D.H, D.H.alg.of_word(gs));
    return NcPoly(e);
}

namespace {

MTensor dual_cocycle_value(const BicrossData& D, const Word& h) {
    MTensor out({&D.A.alg, &D.A.alg});
    if (!D.psi_trivial() && h.size() == 1 && h[0].exp == 1 &&
        D.H.alg.gen(h[0].gen).kind == GenKind::ordinary) {
        auto it = D.dual_cocycle.find(h[0].gen);
        if (it != D.dual_cocycle.end()) return it->second;
    }
    out.add({Word{}, Word{}}, counit_of(D.H, D.H.alg.of_word(h)));
    return out;
}

} // namespace

// ---------------------------------------------------------------- suites

CheckReport check_module_algebra(const BicrossData& D) {
    CheckReport rep{"module-algebra(" + D.H.name + " on " + D.A.name + ")", {}};
    const Algebra& A = D.A.alg;
    const Algebra& Hg = D.H.alg;
    auto agens = ordinary_gens(A);
    auto hgens = ordinary_gens(Hg);

    for (GenId a : agens) {
        NcPoly r = act_right(D, A.of_gen(a), {}) - A.of_gen(a);
        rep.add("action-unit", A.gen(a).name, r.is_zero(), r.is_zero() ? "" : r.to_string(A));
    }
    for (GenId h : hgens) {
        NcPoly r = act_right(D, NcPoly::one(), {{h, 1}}) - NcPoly(D.H.eps(h));
        rep.add("unit-action", Hg.gen(h).name, r.is_zero(), r.is_zero() ? "" : r.to_string(A));
    }

    if (D.xi_trivial()) {
        // acting by a bracket equals the commutator of the iterated actions
        for (GenId a : agens)
            for (GenId h : hgens)
                for (GenId g : hgens) {
                    if (h == g) continue;
                    NcPoly lhs = act_right_poly(D, A.of_gen(a), Hg.bracket(Hg.of_gen(h), Hg.of_gen(g)));
                    NcPoly rhs = act_right(D, act_right(D, A.of_gen(a), {{h, 1}}), {{g, 1}}) -
                                 act_right(D, act_right(D, A.of_gen(a), {{g, 1}}), {{h, 1}});
                    NcPoly r = lhs - rhs;
                    rep.add("action-assoc",
                            A.gen(a).name + " <| [" + Hg.gen(h).name + "," + Hg.gen(g).name + "]",
                            r.is_zero(), r.is_zero() ? "" : r.to_string(A));
                }
    } else {
        // associativity twisted by the cocycle
        for (GenId a : agens)
            for (GenId h : hgens)
                for (GenId g : hgens) {
                    NcPoly lhs, rhs;
                    for (auto& [hs, hc] : D.H.cop(h).terms())
                        for (auto& [gs, gc] : D.H.cop(g).terms()) {
                            Scalar k = hc * gc;
                            NcPoly xi1 = cocycle_value(D, hs[0], gs[0]);
                            NcPoly inner = act_right(D, act_right(D, A.of_gen(a), hs[1]), gs[1]);
                            lhs = lhs + A.mul(xi1, inner).scaled(k);
                            NcPoly prod = Hg.mul(Hg.of_word(hs[0]), Hg.of_word(gs[0]));
                            NcPoly acted = act_right_poly(D, A.of_gen(a), prod);
                            rhs = rhs + A.mul(acted, cocycle_value(D, hs[1], gs[1])).scaled(k);
                        }
                    NcPoly r = lhs - rhs;
                    rep.add("twisted-assoc",
                            A.gen(a).name + " <| (" + Hg.gen(h).name + " " + Hg.gen(g).name + ")",
                            r.is_zero(), r.is_zero() ? "" : r.to_string(A));
                }
    }

    // product rule: action on a reordered product agrees with the coproduct
    // distribution over the original factor order
    for (GenId a : agens)
        for (GenId b : agens)
            for (GenId h : hgens) {
                NcPoly via_nf = act_gen(D, A.mul(A.of_gen(a), A.of_gen(b)), h);
                NcPoly free_side;
                for (auto& [slots, c] : D.H.cop(h).terms())
                    free_side = free_side + A.mul(act_right(D, A.of_gen(a), slots[0]),
                                                  act_right(D, A.of_gen(b), slots[1]))
                                                .scaled(c);
                NcPoly r = via_nf - free_side;
                rep.add("module-algebra",
                        A.gen(a).name + " " + A.gen(b).name + " <| " + Hg.gen(h).name,
                        r.is_zero(), r.is_zero() ? "" : r.to_string(A));
            }

    if (!D.xi_trivial()) {
        for (GenId h : hgens) {
            NcPoly r1 = cocycle_value(D, {{h, 1}}, {}) - NcPoly(D.H.eps(h));
            NcPoly r2 = cocycle_value(D, {}, {{h, 1}}) - NcPoly(D.H.eps(h));
            rep.add("cocycle-unit", Hg.gen(h).name, r1.is_zero() && r2.is_zero());
        }
        // The cocycle condition itself is verified operationally when the
        // product is assembled: the twisted relation table must satisfy the
        // Jacobi identity, which is its generator-level associativity
        // content. build_bicrossproduct performs that check; here we record
        // the antisymmetry of the stored table.
        for (auto& [key, v] : D.cocycle) {
            NcPoly r = cocycle_value(D, {{key.first, 1}}, {{key.second, 1}}) +
                       cocycle_value(D, {{key.second, 1}}, {{key.first, 1}});
            rep.add("cocycle-antisymmetry",
                    Hg.gen(key.first).name + "," + Hg.gen(key.second).name, r.is_zero(),
                    r.is_zero() ? "" : r.to_string(A));
        }
    }
    return rep;
}

CheckReport check_comodule_coalgebra(const BicrossData& D) {
    CheckReport rep{"comodule-coalgebra(" + D.A.name + " on " + D.H.name + ")", {}};
    const Algebra& A = D.A.alg;
    const Algebra& Hg = D.H.alg;
    auto hgens = ordinary_gens(Hg);

    for (GenId h : hgens) {
        MTensor b = coact(D, {{h, 1}});

        // counit law of the coaction: (eps_A (x) id) beta = id
        NcPoly collapsed;
        for (auto& [ws, c] : b.terms)
            collapsed = collapsed + Hg.of_word(ws[1], c * counit_of(D.A, A.of_word(ws[0])));
        NcPoly r6 = collapsed - Hg.of_gen(h);
        rep.add("coaction-counit", Hg.gen(h).name, r6.is_zero(), r6.is_zero() ? "" : r6.to_string(Hg));

        // comodule counit law: (id (x) eps_H) beta = eps_H 1_A
        NcPoly a_side;
        for (auto& [ws, c] : b.terms)
            a_side = a_side + A.of_word(ws[0], c * counit_of(D.H, Hg.of_word(ws[1])));
        NcPoly r8 = a_side - NcPoly(D.H.eps(h));
        rep.add("comodule-counit", Hg.gen(h).name, r8.is_zero(), r8.is_zero() ? "" : r8.to_string(A));

        // coaction coassociativity (or its dual-cocycle twist when psi is set)
        if (D.psi_trivial()) {
            MTensor lhs({&A, &A, &Hg}), rhs({&A, &A, &Hg});
            for (auto& [ws, c] : b.terms) {
                MTensor inner = coact(D, ws[1]);
                for (auto& [iw, ic] : inner.terms) lhs.add({ws[0], iw[0], iw[1]}, c * ic);
                TensorElem da = coproduct_of(D.A, A.of_word(ws[0]));
                for (auto& [dw, dc] : da.terms()) rhs.add({dw[0], dw[1], ws[1]}, c * dc);
            }
            MTensor r7 = lhs - rhs;
            rep.add("coaction-coassoc", Hg.gen(h).name, r7.is_zero(),
                    r7.is_zero() ? "" : r7.to_string());
        } else {
            // ((id (x) beta) beta(h1)) (psi(h2) (x) 1) = psi(h1) Delta(h2_A) (x) h2_H
            MTensor lhs({&A, &A, &Hg}), rhs({&A, &A, &Hg});
            MTensor dh = delta_h(D.H, {{h, 1}}, 2);
            for (auto& [hw, hc] : dh.terms) {
                MTensor b1 = coact(D, hw[0]);
                MTensor psi2 = dual_cocycle_value(D, hw[1]);
                for (auto& [bw, bc] : b1.terms) {
                    MTensor inner = coact(D, bw[1]);
                    for (auto& [iw, ic] : inner.terms)
                        for (auto& [pw, pc] : psi2.terms) {
                            NcPoly s1 = A.mul(A.of_word(bw[0]), A.of_word(pw[0]));
                            NcPoly s2 = A.mul(A.of_word(iw[0]), A.of_word(pw[1]));
                            for (auto& [w1, c1] : s1.terms())
                                for (auto& [w2, c2] : s2.terms())
                                    lhs.add({w1, w2, iw[1]}, hc * bc * ic * pc * c1 * c2);
                        }
                }
                MTensor psi1 = dual_cocycle_value(D, hw[0]);
                MTensor b2 = coact(D, hw[1]);
                for (auto& [pw, pc] : psi1.terms)
                    for (auto& [bw, bc] : b2.terms) {
                        TensorElem da = coproduct_of(D.A, A.of_word(bw[0]));
                        for (auto& [dw, dc] : da.terms()) {
                            NcPoly s1 = A.mul(A.of_word(pw[0]), A.of_word(dw[0]));
                            NcPoly s2 = A.mul(A.of_word(pw[1]), A.of_word(dw[1]));
                            for (auto& [w1, c1] : s1.terms())
                                for (auto& [w2, c2] : s2.terms())
                                    rhs.add({w1, w2, bw[1]}, hc * pc * bc * dc * c1 * c2);
                        }
                    }
            }
            MTensor r24 = lhs - rhs;
            rep.add("twisted-coassoc", Hg.gen(h).name, r24.is_zero(),
                    r24.is_zero() ? "" : r24.to_string());
        }

        // comodule coalgebra law: (id (x) Delta_H) beta(h) = (beta (x) beta) Delta(h)
        bool trivial_beta = !D.coaction.count(h);
        MTensor lhs({&A, &Hg, &Hg}), rhs({&A, &Hg, &Hg});
        for (auto& [ws, c] : b.terms) {
            TensorElem dh2 = coproduct_of(D.H, Hg.of_word(ws[1]));
            for (auto& [dw, dc] : dh2.terms()) lhs.add({ws[0], dw[0], dw[1]}, c * dc);
        }
        for (auto& [dw, dc] : D.H.cop(h).terms()) {
            MTensor b1 = coact(D, dw[0]);
            MTensor b2 = coact(D, dw[1]);
            for (auto& [w1, c1] : b1.terms)
                for (auto& [w2, c2] : b2.terms) {
                    NcPoly amul = A.mul(A.of_word(w1[0]), A.of_word(w2[0]));
                    for (auto& [aw, ac] : amul.terms())
                        rhs.add({aw, w1[1], w2[1]}, dc * c1 * c2 * ac);
                }
        }
        MTensor r9 = lhs - rhs;
        rep.add("comodule-coalgebra", Hg.gen(h).name, r9.is_zero(),
                r9.is_zero() ? "" : r9.to_string(),
                trivial_beta ? "trivial coaction and primitive coproduct" : "");
    }

    if (!D.psi_trivial()) {
        for (GenId h : hgens) {
            // counit laws of the dual cocycle
            MTensor p = dual_cocycle_value(D, {{h, 1}});
            NcPoly l1, l2;
            for (auto& [ws, c] : p.terms) {
                l1 = l1 + A.of_word(ws[1], c * counit_of(D.A, A.of_word(ws[0])));
                l2 = l2 + A.of_word(ws[0], c * counit_of(D.A, A.of_word(ws[1])));
            }
            NcPoly r22 = (l1 - NcPoly(D.H.eps(h))) + (l2 - NcPoly(D.H.eps(h)));
            rep.add("dual-unit", Hg.gen(h).name, r22.is_zero(), r22.is_zero() ? "" : r22.to_string(A));
        }
    }
    return rep;
}

CheckReport check_compatibility(const BicrossData& D) {
    CheckReport rep{"compatibility(" + D.H.name + ", " + D.A.name + ")", {}};
    const Algebra& A = D.A.alg;
    const Algebra& Hg = D.H.alg;
    auto agens = ordinary_gens(A);
    auto hgens = ordinary_gens(Hg);

    // counit compatibility of the action
    for (GenId a : agens)
        for (GenId h : hgens) {
            Scalar lhs = counit_of(D.A, act_right(D, A.of_gen(a), {{h, 1}}));
            Scalar rhs = counit_of(D.A, A.of_gen(a)) * D.H.eps(h);
            rep.add("counit-compat", A.gen(a).name + " <| " + Hg.gen(h).name, lhs == rhs,
                    lhs == rhs ? "" : (lhs - rhs).to_string());
        }

    // unit coaction
    {
        MTensor b = coact(D, {});
        MTensor want = mt_ah(D);
        want.add({Word{}, Word{}}, Scalar(1));
        MTensor r = b - want;
        rep.add("coaction-unit", "1", r.is_zero(), r.is_zero() ? "" : r.to_string());
    }

    // coproduct compatibility (plain or with the dual cocycle legs)
    for (GenId a : agens)
        for (GenId h : hgens) {
            MTensor lhs({&A, &A}), rhs({&A, &A});
            {
                TensorElem da = coproduct_of(D.A, act_right(D, A.of_gen(a), {{h, 1}}));
                for (auto& [dw, dc] : da.terms()) lhs.add({dw[0], dw[1]}, dc);
            }
            TensorElem daa = D.A.cop(a);
            for (auto& [aw, ac] : daa.terms())
                for (auto& [hw, hc] : D.H.cop(h).terms()) {
                    NcPoly first = act_right(D, A.of_word(aw[0]), hw[0]);
                    MTensor bh2 = coact(D, hw[1]);
                    for (auto& [bw, bc] : bh2.terms) {
                        NcPoly s1 = A.mul(first, A.of_word(bw[0]));
                        NcPoly s2 = act_right(D, A.of_word(aw[1]), bw[1]);
                        for (auto& [w1, c1] : s1.terms())
                            for (auto& [w2, c2] : s2.terms())
                                rhs.add({w1, w2}, ac * hc * bc * c1 * c2);
                    }
                }
            MTensor r = lhs - rhs;
            rep.add("coproduct-compat", "Delta(" + A.gen(a).name + " <| " + Hg.gen(h).name + ")",
                    r.is_zero(), r.is_zero() ? "" : r.to_string());
        }

    // product coaction: well-definedness against H's relations
    if (D.xi_trivial()) {
        for (GenId h : hgens)
            for (GenId g : hgens) {
                if (h == g) continue;
                MTensor lhs = coact(D, {{std::min(h, g), 1}, {std::max(h, g), 1}});
                // evaluated in the opposite order minus the bracket
                MTensor explicit_hg = coact_product(D, std::min(h, g), std::max(h, g));
                MTensor r0 = lhs - explicit_hg;
                rep.add("coaction-product",
                        Hg.gen(std::min(h, g)).name + " " + Hg.gen(std::max(h, g)).name,
                        r0.is_zero(), r0.is_zero() ? "" : r0.to_string());

                MTensor ab = coact_product(D, h, g);
                MTensor ba = coact_product(D, g, h);
                MTensor br = coact_poly(D, Hg.bracket(Hg.of_gen(h), Hg.of_gen(g)));
                MTensor r = (ab - ba) - br;
                rep.add("coaction-relations", "[" + Hg.gen(h).name + "," + Hg.gen(g).name + "]",
                        r.is_zero(), r.is_zero() ? "" : r.to_string());
            }
    } else {
        // the cocycle-corrected product coaction must be well defined against
        // H's relations; evaluate on words in both orders before normalizing
        for (GenId h : hgens)
            for (GenId g : hgens) {
                if (h == g) continue;
                MTensor ab = coact(D, Word{{h, 1}, {g, 1}});
                MTensor ba = coact(D, Word{{g, 1}, {h, 1}});
                MTensor br = coact_poly(D, Hg.bracket(Hg.of_gen(h), Hg.of_gen(g)));
                MTensor r = (ab - ba) - br;
                rep.add("cocycle-coaction", "[" + Hg.gen(h).name + "," + Hg.gen(g).name + "]",
                        r.is_zero(), r.is_zero() ? "" : r.to_string());
            }
    }

    // mixed compatibility; automatic for commutative A and cocommutative H
    bool a_comm = true;
    for (GenId x : agens)
        for (GenId y : agens)
            if (!A.bracket(A.of_gen(x), A.of_gen(y)).is_zero()) a_comm = false;
    bool h_cocomm = true;
    for (GenId h : hgens) {
        TensorElem t = D.H.cop(h);
        TensorElem tw(2);
        for (auto& [ws, c] : t.terms()) tw.add({ws[1], ws[0]}, c);
        if (!(t == tw)) h_cocomm = false;
    }
    for (GenId a : agens)
        for (GenId h : hgens) {
            MTensor lhs = mt_ah(D), rhs = mt_ah(D);
            for (auto& [hw, hc] : D.H.cop(h).terms()) {
                MTensor b1 = coact(D, hw[0]);
                NcPoly acted = act_right(D, A.of_gen(a), hw[1]);
                for (auto& [bw, bc] : b1.terms) {
                    NcPoly s1 = A.mul(A.of_word(bw[0]), acted);
                    for (auto& [w1, c1] : s1.terms()) lhs.add({w1, bw[1]}, hc * bc * c1);
                }
                NcPoly acted1 = act_right(D, A.of_gen(a), hw[0]);
                MTensor b2 = coact(D, hw[1]);
                for (auto& [bw, bc] : b2.terms) {
                    NcPoly s1 = A.mul(acted1, A.of_word(bw[0]));
                    for (auto& [w1, c1] : s1.terms()) rhs.add({w1, bw[1]}, hc * bc * c1);
                }
            }
            MTensor r = lhs - rhs;
            rep.add("mixed-compat", A.gen(a).name + ", " + Hg.gen(h).name, r.is_zero(),
                    r.is_zero() ? "" : r.to_string(),
                    (a_comm && h_cocomm) ? "automatic: A commutative, H cocommutative" : "");
        }

    // cocycle-specific counit laws
    if (!D.xi_trivial()) {
        for (GenId h : hgens)
            for (GenId g : hgens) {
                Scalar e = counit_of(D.A, cocycle_value(D, {{h, 1}}, {{g, 1}}));
                Scalar want = D.H.eps(h) * D.H.eps(g);
                rep.add("cocycle-counit", Hg.gen(h).name + "," + Hg.gen(g).name, e == want,
                        e == want ? "" : (e - want).to_string());
            }
    }
    return rep;
}

// the product-coaction evaluated explicitly for an ordered generator pair
static MTensor coact_product(const BicrossData& D, GenId h, GenId g) {
    const Algebra& A = D.A.alg;
    const Algebra& Hg = D.H.alg;
    MTensor out = mt_ah(D);
    MTensor bh = coact(D, {{h, 1}});
    for (auto& [hw, hc] : bh.terms)
        for (auto& [gs, gc] : D.H.cop(g).terms()) {
            NcPoly a_acted = act_right(D, A.of_word(hw[0]), gs[0]);
            MTensor bg2 = coact(D, gs[1]);
            for (auto& [bw, bc] : bg2.terms) {
                NcPoly slot1 = A.mul(a_acted, A.of_word(bw[0]));
                NcPoly slot2 = Hg.mul(Hg.of_word(hw[1]), Hg.of_word(bw[1]));
                for (auto& [s1, c1] : slot1.terms())
                    for (auto& [s2, c2] : slot2.terms())
                        out.add({s1, s2}, hc * gc * bc * c1 * c2);
            }
        }
    return out;
}


// ---------------------------------------------------------------- build

namespace {

// During construction the bicrossproduct lives on pairs (H word, A word);
// nothing here needs the combined relation table, which is exactly what makes
// the construction well-founded.
using PairElem = std::map<std::pair<Word, Word>, Scalar>;

void pair_add(PairElem& p, const Word& u, const Word& x, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(u, x);
    auto it = p.find(key);
    if (it == p.end()) {
        p.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

PairElem emb_h(const NcPoly& p) {
    PairElem out;
    for (auto& [w, c] : p.terms()) pair_add(out, w, {}, c);
    return out;
}

PairElem emb_a(const NcPoly& p) {
    PairElem out;
    for (auto& [w, c] : p.terms()) pair_add(out, {}, w, c);
    return out;
}

// cocycle bicrossproduct multiplication on the pair carrier
PairElem k_mul(const BicrossData& D, const PairElem& p, const PairElem& q) {
    const Algebra& A = D.A.alg;
    const Algebra& Hg = D.H.alg;
    PairElem out;
    for (auto& [pk, c] : p)
        for (auto& [qk, d] : q) {
            const Word& u = pk.first;
            const Word& x = pk.second;
            const Word& v = qk.first;
            const Word& y = qk.second;
            TensorElem du = coproduct_of(D.H, Hg.of_word(u));
            MTensor dv = delta_h(D.H, v, 3);
            for (auto& [us, uc] : du.terms())
                for (auto& [vs, vc] : dv.terms) {
                    NcPoly hpart = Hg.mul(Hg.of_word(us[0]), Hg.of_word(vs[0]));
                    if (hpart.is_zero()) continue;
                    NcPoly xi = cocycle_value(D, us[1], vs[1]);
                    if (xi.is_zero()) continue;
                    NcPoly acted = act_right(D, A.of_word(x), vs[2]);
                    NcPoly apart = A.mul(A.mul(xi, acted), A.of_word(y));
                    for (auto& [hw, hc] : hpart.terms())
                        for (auto& [aw, ac] : apart.terms())
                            pair_add(out, hw, aw, c * d * uc * vc * hc * ac);
                }
        }
    return out;
}

PairElem k_sub(PairElem a, const PairElem& b) {
    for (auto& [k, c] : b) pair_add(a, k.first, k.second, -c);
    return a;
}


struct CombinedIndex {
    std::vector<Generator> gens;                 // combined, class-sorted
    std::map<std::string, GenId> id;             // by name
    const Algebra* a_side;
    const Algebra* h_side;
};

CombinedIndex combine_generators(const BicrossData& D) {
    CombinedIndex ix;
    ix.a_side = &D.A.alg;
    ix.h_side = &D.H.alg;
    std::vector<Generator> all;
    for (auto& g : D.A.alg.gens()) all.push_back(g);
    for (auto& g : D.H.alg.gens()) {
        if (D.A.alg.has_gen(g.name))
            throw error(errc::validation, "generator name collision in bicrossproduct: " + g.name);
        all.push_back(g);
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const Generator& x, const Generator& y) { return x.klass < y.klass; });
    ix.gens = std::move(all);
    for (GenId i = 0; i < ix.gens.size(); ++i) ix.id[ix.gens[i].name] = i;
    return ix;
}

// translate a pair element into combined raw words, sorting letters by
// combined rank; every transposition performed must be between letters whose
// K-commutator was computed to vanish
std::vector<RawTerm> to_combined(const CombinedIndex& ix, const PairElem& p,
                                 const std::map<std::pair<GenId, GenId>, bool>& commutes) {
    std::vector<RawTerm> out;
    for (auto& [key, c] : p) {
        std::vector<Factor> w;
        for (auto& f : key.first) w.push_back({ix.id.at(ix.h_side->gen(f.gen).name), f.exp});
        for (auto& f : key.second) w.push_back({ix.id.at(ix.a_side->gen(f.gen).name), f.exp});
        // bubble sort with commutation checks
        for (size_t i = 0; i + 1 < w.size(); ++i)
            for (size_t j = 0; j + 1 < w.size() - i; ++j)
                if (w[j].gen > w[j + 1].gen) {
                    auto key2 = std::make_pair(std::max(w[j].gen, w[j + 1].gen),
                                               std::min(w[j].gen, w[j + 1].gen));
                    auto it = commutes.find(key2);
                    if (it == commutes.end() || !it->second)
                        throw error(errc::internal,
                                    "bicrossproduct entry needs a non-commuting reorder");
                    std::swap(w[j], w[j + 1]);
                }
        out.push_back({c, w});
    }
    return out;
}

Word map_word(const CombinedIndex& ix, const Algebra& side, const Word& w) {
    Word out;
    for (auto& f : w) out.push_back({ix.id.at(side.gen(f.gen).name), f.exp});
    return out;
}

// (H word, A word) -> combined element, normalized by the combined table
NcPoly pair_to_poly(const Algebra& K, const CombinedIndex& ix, const Word& u, const Word& x) {
    RawTerm t{Scalar(1), {}};
    for (auto& f : u) t.word.push_back({ix.id.at(ix.h_side->gen(f.gen).name), f.exp});
    for (auto& f : x) t.word.push_back({ix.id.at(ix.a_side->gen(f.gen).name), f.exp});
    return K.normal_form({t});
}

} // namespace

HopfPresentation build_bicrossproduct(const BicrossData& D, const std::string& name) {
    // the construction presumes the verified structure
    for (auto rep : {check_module_algebra(D), check_comodule_coalgebra(D), check_compatibility(D)})
        if (!rep.all_pass())
            throw error(errc::axiom_failure, "bicrossproduct axioms fail in suite " + rep.suite);

    const Algebra& A = D.A.alg;
    const Algebra& Hg = D.H.alg;
    CombinedIndex ix = combine_generators(D);

    // pass 1: every pairwise commutator on the pair carrier
    auto emb_gen = [&](const Generator& g) -> PairElem {
        if (ix.a_side->has_gen(g.name)) return emb_a(A.of_gen(A.gen_id(g.name)));
        return emb_h(Hg.of_gen(Hg.gen_id(g.name)));
    };
    std::map<std::pair<GenId, GenId>, PairElem> comm;
    std::map<std::pair<GenId, GenId>, bool> commutes;
    for (GenId hi = 0; hi < ix.gens.size(); ++hi)
        for (GenId lo = 0; lo < hi; ++lo) {
            PairElem b = emb_gen(ix.gens[hi]);
            PairElem a = emb_gen(ix.gens[lo]);
            PairElem r = k_sub(k_mul(D, b, a), k_mul(D, a, b));
            commutes[{hi, lo}] = r.empty();
            comm[{hi, lo}] = std::move(r);
        }

    // pass 2: assemble the combined relation table
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    for (auto& [key, r] : comm) {
        if (r.empty()) continue;
        const Generator& b = ix.gens[key.first];
        const Generator& a = ix.gens[key.second];
        if (b.kind == GenKind::grouplike || a.kind == GenKind::grouplike)
            continue;   // group-like rows are derived from the exponents
        brackets[{b.name, a.name}] = to_combined(ix, r, commutes);
    }

    // the combined relation table is complete; everything else is expressed
    // through its normal form
    Algebra K = Algebra::build(name, ix.gens, brackets);

    // generator-level associativity content of the twisted product: the
    // assembled table must satisfy the Jacobi identity
    for (GenId a = 0; a < K.size(); ++a)
        for (GenId b = (GenId)(a + 1); b < K.size(); ++b)
            for (GenId c = (GenId)(b + 1); c < K.size(); ++c) {
                NcPoly pa = K.of_gen(a), pb = K.of_gen(b), pc = K.of_gen(c);
                NcPoly r = K.bracket(K.bracket(pa, pb), pc) + K.bracket(K.bracket(pb, pc), pa) +
                           K.bracket(K.bracket(pc, pa), pb);
                if (!r.is_zero())
                    throw error(errc::axiom_failure,
                                "bicrossproduct table fails the Jacobi identity on " +
                                    K.gen(a).name + "," + K.gen(b).name + "," + K.gen(c).name);
            }

    // coproducts via the (dual-)cocycle coproduct formula
    std::map<std::string, TensorElem> cops;
    std::map<std::string, Scalar> eps;
    std::map<std::string, NcPoly> antis;
    std::map<GenId, TensorElem> solved_cops;   // keyed by combined id

    for (GenId g = 0; g < ix.gens.size(); ++g) {
        const Generator& gen = ix.gens[g];
        if (gen.kind == GenKind::grouplike) continue;
        TensorElem t(2);
        if (ix.a_side->has_gen(gen.name)) {
            GenId ga = A.gen_id(gen.name);
            for (auto& [ws, c] : D.A.cop(ga).terms())
                t.add({map_word(ix, A, ws[0]), map_word(ix, A, ws[1])}, c);
            eps[gen.name] = D.A.eps(ga);
        } else {
            GenId gh = Hg.gen_id(gen.name);
            MTensor d3 = delta_h(D.H, {{gh, 1}}, 3);
            for (auto& [hw, hc] : d3.terms) {
                MTensor b2 = coact(D, hw[1]);
                MTensor psi3 = dual_cocycle_value(D, hw[2]);
                for (auto& [bw, bc] : b2.terms)
                    for (auto& [pw, pc] : psi3.terms) {
                        NcPoly a_first = A.mul(A.of_word(bw[0]), A.of_word(pw[0]));
                        for (auto& [aw, ac] : a_first.terms()) {
                            NcPoly s1 = pair_to_poly(K, ix, hw[0], aw);
                            NcPoly s2 = pair_to_poly(K, ix, bw[1], pw[1]);
                            for (auto& [w1, c1] : s1.terms())
                                for (auto& [w2, c2] : s2.terms())
                                    t.add({w1, w2}, hc * bc * pc * ac * c1 * c2);
                        }
                    }
            }
            eps[gen.name] = D.H.eps(gh);
        }
        cops[gen.name] = t;
        solved_cops[g] = t;
    }

    // antipodes: literal composite for the plain case, antipode-axiom solve
    // for the cocycle case
    if (D.xi_trivial()) {
        for (GenId g = 0; g < ix.gens.size(); ++g) {
            const Generator& gen = ix.gens[g];
            if (gen.kind == GenKind::grouplike) continue;
            if (ix.a_side->has_gen(gen.name)) {
                GenId ga = A.gen_id(gen.name);
                NcPoly s = antipode_of(D.A, A.of_gen(ga));
                NcPoly mapped;
                for (auto& [w, c] : s.terms()) mapped.add(map_word(ix, A, w), c);
                antis[gen.name] = mapped;
            } else {
                GenId gh = Hg.gen_id(gen.name);
                NcPoly acc;
                MTensor b = coact(D, {{gh, 1}});
                for (auto& [bw, bc] : b.terms) {
                    NcPoly sa = antipode_of(D.A, A.of_word(bw[0]));
                    NcPoly sh = antipode_of(D.H, Hg.of_word(bw[1]));
                    PairElem prod = k_mul(D, emb_a(sa), emb_h(sh));
                    for (auto& [k2, c2] : prod)
                        acc = acc + pair_to_poly(K, ix, k2.first, k2.second).scaled(bc * c2);
                }
                antis[gen.name] = acc;
            }
        }
    } else {
        // ascending solve of m(S (x) id) Delta = eta eps
        std::map<GenId, NcPoly> s_table;
        auto s_of_word = [&](const Word& w) -> NcPoly {
            NcPoly acc = NcPoly::one();
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                NcPoly s;
                if (ix.gens[it->gen].kind == GenKind::grouplike)
                    s = K.of_word({{it->gen, -it->exp}});
                else {
                    auto f = s_table.find(it->gen);
                    if (f == s_table.end())
                        throw error(errc::internal, "antipode solve hit an unsolved generator");
                    s = K.pow(f->second, (uint32_t)it->exp);
                }
                acc = K.mul(acc, s);
            }
            return acc;
        };
        for (GenId g = 0; g < ix.gens.size(); ++g) {
            const Generator& gen = ix.gens[g];
            if (gen.kind == GenKind::grouplike) continue;
            const TensorElem& t = solved_cops.at(g);
            NcPoly rest;
            bool found_identity = false;
            for (auto& [ws, c] : t.terms()) {
                if (ws[0] == Word{{g, 1}} && ws[1].empty()) {
                    if (!(c == Scalar(1)))
                        throw error(errc::internal, "unexpected identity-term coefficient");
                    found_identity = true;
                    continue;
                }
                rest = rest + K.mul(s_of_word(ws[0]), K.of_word(ws[1])).scaled(c);
            }
            if (!found_identity)
                throw error(errc::internal, "coproduct lacks the primitive leading term");
            s_table[g] = -rest;
            antis[gen.name] = s_table[g];
        }
    }

    return build_hopf(name, ix.gens, brackets, cops, eps, antis);
}

// ---------------------------------------------------------------- compare

ComparisonReport compare_presentations(const HopfPresentation& P, const HopfPresentation& Q,
                                       const std::map<std::string, std::string>& gen_map) {
    ComparisonReport out;
    out.lhs = P.name;
    out.rhs = Q.name;
    out.checks.suite = "compare(" + P.name + " ~ " + Q.name + ")";

    auto mapped_name = [&](const std::string& n) {
        auto it = gen_map.find(n);
        return it == gen_map.end() ? n : it->second;
    };

    if (P.alg.size() != Q.alg.size()) {
        out.checks.add("generator-count", "", false,
                       std::to_string(P.alg.size()) + " vs " + std::to_string(Q.alg.size()));
        return out;
    }

    auto map_poly = [&](const NcPoly& p) -> NcPoly {
        std::vector<RawTerm> raw;
        for (auto& [w, c] : p.terms()) {
            RawTerm t{c, {}};
            for (auto& f : w) t.word.push_back({Q.alg.gen_id(mapped_name(P.alg.gen(f.gen).name)), f.exp});
            raw.push_back(std::move(t));
        }
        return Q.alg.normal_form(raw);
    };

    // kinds and group-like exponents
    for (GenId g = 0; g < P.alg.size(); ++g) {
        const Generator& pg = P.alg.gen(g);
        std::string qn = mapped_name(pg.name);
        if (!Q.alg.has_gen(qn)) {
            out.checks.add("generator-map", pg.name, false, "missing image " + qn);
            continue;
        }
        const Generator& qg = Q.alg.gen(Q.alg.gen_id(qn));
        bool kind_ok = pg.kind == qg.kind;
        if (kind_ok && pg.kind == GenKind::grouplike) {
            std::map<std::string, Scalar> pe, qe;
            for (auto& [n, r] : pg.exponent.terms) pe[mapped_name(n)] = r;
            for (auto& [n, r] : qg.exponent.terms) qe[n] = r;
            kind_ok = pe == qe;
        }
        out.checks.add("generator-map", pg.name + " -> " + qn, kind_ok,
                       kind_ok ? "" : "kind or exponent mismatch");
    }
    if (!out.checks.all_pass()) return out;

    // relations, including the rows derived from group-like exponents
    for (GenId b = 0; b < P.alg.size(); ++b)
        for (GenId a = 0; a < b; ++a) {
            NcPoly lhs = Q.alg.bracket(Q.alg.of_gen(Q.alg.gen_id(mapped_name(P.alg.gen(b).name))),
                                       Q.alg.of_gen(Q.alg.gen_id(mapped_name(P.alg.gen(a).name))));
            NcPoly rhs = map_poly(P.alg.bracket(P.alg.of_gen(b), P.alg.of_gen(a)));
            NcPoly r = lhs - rhs;
            out.checks.add("relation", "[" + P.alg.gen(b).name + "," + P.alg.gen(a).name + "]",
                           r.is_zero(), r.is_zero() ? "" : r.to_string(Q.alg));
        }

    // coproducts, counits, antipodes
    for (GenId g = 0; g < P.alg.size(); ++g) {
        if (P.alg.gen(g).kind == GenKind::grouplike) continue;
        GenId qg = Q.alg.gen_id(mapped_name(P.alg.gen(g).name));
        TensorElem lhs = coproduct_of(Q, Q.alg.of_gen(qg));
        TensorElem rhs(2);
        for (auto& [ws, c] : P.cop(g).terms()) {
            NcPoly w0 = map_poly(P.alg.of_word(ws[0]));
            NcPoly w1 = map_poly(P.alg.of_word(ws[1]));
            for (auto& [u, cu] : w0.terms())
                for (auto& [v, cv] : w1.terms()) rhs.add({u, v}, c * cu * cv);
        }
        TensorElem dr = lhs - rhs;
        out.checks.add("coproduct", P.alg.gen(g).name, dr.is_zero(),
                       dr.is_zero() ? "" : dr.to_string(Q.alg));

        Scalar er = P.eps(g) - Q.eps(qg);
        out.checks.add("counit", P.alg.gen(g).name, er.is_zero(), er.is_zero() ? "" : er.to_string());

        NcPoly sr = antipode_of(Q, Q.alg.of_gen(qg)) - map_poly(P.anti(g));
        out.checks.add("antipode", P.alg.gen(g).name, sr.is_zero(),
                       sr.is_zero() ? "" : sr.to_string(Q.alg));
    }
    return out;
}
} // namespace kappa

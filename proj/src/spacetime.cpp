#include "kappa/spacetime.hpp"

#include <algorithm>
#include <sstream>

namespace kappa {

// ---------------------------------------------------------------- CFExpr

CFExpr::CFExpr(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(CFWord{}, c);
}

void CFExpr::add(const CFWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CFExpr CFExpr::operator+(const CFExpr& o) const {
    CFExpr r = *this;
    for (auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

CFExpr CFExpr::operator-(const CFExpr& o) const {
    CFExpr r = *this;
    for (auto& [w, c] : o.terms_) r.add(w, -c);
    return r;
}

CFExpr CFExpr::scaled(const Scalar& c) const {
    CFExpr r;
    if (c.is_zero()) return r;
    for (auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

CFExpr CFExpr::operator*(const CFExpr& o) const {
    CFExpr r;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) {
            CFWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    return r;
}

int FormBasis::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return (int)i;
    throw error(errc::unknown_generator, "unknown form: " + name);
}

Scalar table_entry(const CommutatorTable& t, GenId mu, int a, int b) {
    auto it = t.find({mu, a, b});
    return it == t.end() ? Scalar(0) : it->second;
}

// ---------------------------------------------------------------- action

namespace {

// formal d of a degree <= 1 coordinate expression; constants vanish
CFExpr d_map(const CalculusProblem& prob, const CFExpr& e) {
    CFExpr out;
    for (auto& [w, c] : e.terms()) {
        if (w.empty()) continue;
        if (w.size() != 1 || w[0].is_form)
            throw error(errc::validation, "coordinate action entries must have degree <= 1");
        out.add({CFLetter{true, (uint16_t)prob.forms.differential[w[0].id]}}, c);
    }
    return out;
}

CFExpr act_single(const CalculusProblem& prob, GenId g, const CFLetter& l) {
    if (!l.is_form) {
        auto it = prob.model.on_coord.find({g, l.id});
        if (it == prob.model.on_coord.end())
            throw error(errc::unknown_generator,
                        "no action entry for " + prob.model.sym->alg.gen(g).name + " on coordinate " +
                            prob.coords.gen(l.id).name);
        return it->second;
    }
    // differentials act through d; extras through their explicit table
    for (GenId c = 0; c < prob.coords.size(); ++c)
        if (prob.forms.differential[c] == (int)l.id)
            return d_map(prob, act_single(prob, g, CFLetter{false, (uint16_t)c}));
    auto it = prob.model.on_extra_form.find({g, l.id});
    if (it == prob.model.on_extra_form.end())
        throw error(errc::unknown_generator,
                    "no action entry for " + prob.model.sym->alg.gen(g).name + " on form " +
                        prob.forms.names[l.id]);
    return it->second;
}

size_t coord_letters(const CFWord& w) {
    size_t n = 0;
    for (auto& l : w) n += !l.is_form;
    return n;
}

CFExpr act_word(const CalculusProblem& prob, GenId g, const CFWord& w);

CFExpr act_expr_gen(const CalculusProblem& prob, GenId g, const CFExpr& e) {
    CFExpr out;
    for (auto& [w, c] : e.terms()) out = out + act_word(prob, g, w).scaled(c);
    return out;
}

CFExpr act_expr_poly(const CalculusProblem& prob, const NcPoly& p, const CFExpr& e);

CFExpr act_expr_factor(const CalculusProblem& prob, const Factor& f, const CFExpr& e) {
    const Algebra& S = prob.model.sym->alg;
    if (S.gen(f.gen).kind == GenKind::ordinary) {
        if (f.exp < 0) throw error(errc::internal, "negative ordinary action power");
        CFExpr cur = e;
        for (int32_t i = 0; i < f.exp; ++i) cur = act_expr_gen(prob, f.gen, cur);
        return cur;
    }
    // group-like: exact exponential series, truncated by the coordinate degree
    NcPoly x;
    for (auto& [prim, rate] : S.gen(f.gen).exponent.terms)
        x.add({{S.gen_id(prim), 1}}, rate * Scalar(f.exp));
    CFExpr out;
    for (auto& [w, c] : e.terms()) {
        size_t maxn = coord_letters(w);
        CFExpr acc;
        acc.add(w, c);
        CFExpr sum = acc;
        NcPoly xp = NcPoly::one();
        Rat fact(1);
        for (size_t n = 1; n <= maxn; ++n) {
            xp = S.mul(xp, x);
            fact = fact * Rat((long long)n);
            CFExpr term = act_expr_poly(prob, xp, acc);
            sum = sum + term.scaled(Scalar(Rat(1) / fact));
        }
        out = out + sum;
    }
    return out;
}

CFExpr act_expr_word(const CalculusProblem& prob, const Word& u, const CFExpr& e) {
    if (u.empty()) return e;
    // (g h) |> w = g |> (h |> w)
    CFExpr inner = act_expr_word(prob, Word(u.begin() + 1, u.end()), e);
    return act_expr_factor(prob, u[0], inner);
}

CFExpr act_expr_poly(const CalculusProblem& prob, const NcPoly& p, const CFExpr& e) {
    CFExpr out;
    for (auto& [w, c] : p.terms()) out = out + act_expr_word(prob, w, e).scaled(c);
    return out;
}

// action of one ordinary symmetry generator on a free word, distributing
// through the coproduct
CFExpr act_word(const CalculusProblem& prob, GenId g, const CFWord& w) {
    const HopfPresentation& H = *prob.model.sym;
    if (w.empty()) return CFExpr(H.eps(g));
    if (w.size() == 1) return act_single(prob, g, w[0]);
    CFWord rest(w.begin() + 1, w.end());
    CFExpr first;
    first.add({w[0]}, Scalar(1));
    CFExpr out;
    for (auto& [slots, c] : H.cop(g).terms()) {
        CFExpr left = act_expr_word(prob, slots[0], first);
        CFExpr base;
        base.add(rest, Scalar(1));
        CFExpr right = act_expr_word(prob, slots[1], base);
        out = out + (left * right).scaled(c);
    }
    return out;
}

} // namespace

CFExpr left_act(const CalculusProblem& prob, const NcPoly& h, const CFWord& w) {
    CFExpr base;
    base.add(w, Scalar(1));
    return act_expr_poly(prob, h, base);
}

// ---------------------------------------------------------------- rows

namespace {

// decomposition of h |> [x_mu, chi_a] into commutator coefficients d_{nu b}
// and inhomogeneous form terms e_b
struct LhsDecomp {
    std::map<std::pair<GenId, int>, Scalar> d;
    std::map<int, Scalar> e;
};

LhsDecomp decompose_action(const CalculusProblem& prob, GenId g, GenId mu, int a) {
    CFWord xf = {CFLetter{false, (uint16_t)mu}, CFLetter{true, (uint16_t)a}};
    CFWord fx = {CFLetter{true, (uint16_t)a}, CFLetter{false, (uint16_t)mu}};
    CFExpr lhs = left_act(prob, prob.model.sym->alg.of_gen(g), xf) -
                 left_act(prob, prob.model.sym->alg.of_gen(g), fx);
    LhsDecomp out;
    std::map<std::pair<GenId, int>, Scalar> rev;
    for (auto& [w, c] : lhs.terms()) {
        if (w.size() == 1 && w[0].is_form) {
            out.e[w[0].id] += c;
        } else if (w.size() == 2 && !w[0].is_form && w[1].is_form) {
            out.d[{w[0].id, (int)w[1].id}] += c;
        } else if (w.size() == 2 && w[0].is_form && !w[1].is_form) {
            rev[{w[1].id, (int)w[0].id}] += c;
        } else {
            throw error(errc::internal, "unexpected word shape in action decomposition");
        }
    }
    // the action of a commutator organizes into commutators: the reversed
    // words must mirror the direct ones
    for (auto& [k, c] : rev) {
        Scalar direct = out.d.count(k) ? out.d.at(k) : Scalar(0);
        if (!(direct + c).is_zero())
            throw error(errc::internal, "action did not decompose into commutators");
    }
    for (auto it = out.d.begin(); it != out.d.end();)
        it = it->second.is_zero() ? out.d.erase(it) : std::next(it);
    for (auto it = out.e.begin(); it != out.e.end();)
        it = it->second.is_zero() ? out.e.erase(it) : std::next(it);
    return out;
}

// h |> chi_c expanded over the form basis
std::map<int, Scalar> form_action_row(const CalculusProblem& prob, GenId g, int c) {
    CFExpr img = act_single(prob, g, CFLetter{true, (uint16_t)c});
    std::map<int, Scalar> out;
    for (auto& [w, k] : img.terms()) {
        if (w.size() != 1 || !w[0].is_form)
            throw error(errc::validation, "form action entries must be one-forms");
        out[w[0].id] += k;
    }
    return out;
}

// B tensor component: [x_mu, x_nu] = sum_rho B^rho_{mu nu} x_rho
std::map<GenId, Scalar> b_tensor(const CalculusProblem& prob, GenId mu, GenId nu) {
    NcPoly br = prob.coords.bracket(prob.coords.of_gen(mu), prob.coords.of_gen(nu));
    std::map<GenId, Scalar> out;
    for (auto& [w, c] : br.terms()) {
        if (w.size() != 1 || w[0].exp != 1)
            throw error(errc::validation, "coordinate brackets must be linear");
        out[w[0].gen] += c;
    }
    return out;
}

} // namespace

ConstraintSystem generate_constraints(const CalculusProblem& prob) {
    ConstraintSystem cs;
    size_t ncoord = prob.coords.size();
    size_t nform = prob.forms.size();
    for (GenId mu = 0; mu < ncoord; ++mu)
        for (int a = 0; a < (int)nform; ++a)
            for (int b = 0; b < (int)nform; ++b) {
                cs.var_of[{mu, a, b}] = cs.unknowns.size();
                cs.unknowns.push_back({mu, a, b});
            }
    cs.sys.nvars = cs.unknowns.size();

    // covariance rows
    for (GenId g : prob.model.acting)
        for (GenId mu = 0; mu < ncoord; ++mu)
            for (int a = 0; a < (int)nform; ++a) {
                LhsDecomp dec = decompose_action(prob, g, mu, a);
                std::map<int, std::map<size_t, Scalar>> rows;   // per target form c
                std::map<int, Scalar> rhs;
                for (auto& [k, c] : dec.d)
                    for (int cc = 0; cc < (int)nform; ++cc)
                        rows[cc][cs.var_of[{k.first, k.second, cc}]] += c;
                for (auto& [b, c] : dec.e) rhs[b] += c;
                // minus the A-contracted images A^b_{mu a} (g |> chi_b)
                for (int b = 0; b < (int)nform; ++b) {
                    auto img = form_action_row(prob, g, b);
                    for (auto& [cc, k] : img) rows[cc][cs.var_of[{mu, a, b}]] -= k;
                }
                for (int cc = 0; cc < (int)nform; ++cc) {
                    auto it = rows.find(cc);
                    std::map<size_t, Scalar> coeff = (it == rows.end()) ? std::map<size_t, Scalar>{}
                                                                        : it->second;
                    Scalar r = rhs.count(cc) ? -rhs.at(cc) : Scalar(0);
                    if (coeff.empty() && r.is_zero()) continue;
                    std::ostringstream tag;
                    tag << "covariance " << prob.model.sym->alg.gen(g).name << " ["
                        << prob.coords.gen(mu).name << ", " << prob.forms.names[a] << "] -> "
                        << prob.forms.names[cc];
                    cs.sys.add_row(std::move(coeff), r, tag.str());
                }
            }

    // Leibniz rows: d[x_mu, x_nu] = [dx_mu, x_nu] + [x_mu, dx_nu]
    for (GenId mu = 0; mu < ncoord; ++mu)
        for (GenId nu = 0; nu < mu; ++nu) {
            auto b = b_tensor(prob, mu, nu);
            int dmu = prob.forms.differential[mu];
            int dnu = prob.forms.differential[nu];
            for (int cc = 0; cc < (int)prob.forms.size(); ++cc) {
                std::map<size_t, Scalar> coeff;
                coeff[cs.var_of[{mu, dnu, cc}]] += Scalar(1);
                coeff[cs.var_of[{nu, dmu, cc}]] -= Scalar(1);
                Scalar r(0);
                for (auto& [rho, k] : b)
                    if (prob.forms.differential[rho] == cc) r += k;
                std::ostringstream tag;
                tag << "leibniz [" << prob.coords.gen(mu).name << ", " << prob.coords.gen(nu).name
                    << "] -> " << prob.forms.names[cc];
                cs.sys.add_row(std::move(coeff), r, tag.str());
            }
        }
    return cs;
}

// ---------------------------------------------------------------- solver

namespace {

std::vector<Scalar> jacobi_residuals(const CalculusProblem& prob, const CommutatorTable& t,
                                     std::vector<std::string>* tags = nullptr) {
    std::vector<Scalar> out;
    size_t nform = prob.forms.size();
    for (GenId mu = 0; mu < prob.coords.size(); ++mu)
        for (GenId nu = 0; nu < mu; ++nu) {
            auto b = b_tensor(prob, mu, nu);
            for (int a = 0; a < (int)nform; ++a)
                for (int c = 0; c < (int)nform; ++c) {
                    Scalar r(0);
                    for (auto& [rho, k] : b) r += k * table_entry(t, rho, a, c);
                    for (int bb = 0; bb < (int)nform; ++bb) {
                        r -= table_entry(t, nu, a, bb) * table_entry(t, mu, bb, c);
                        r += table_entry(t, mu, a, bb) * table_entry(t, nu, bb, c);
                    }
                    if (r.is_zero()) continue;
                    out.push_back(r);
                    if (tags) {
                        std::ostringstream tag;
                        tag << "jacobi [" << prob.coords.gen(mu).name << ", "
                            << prob.coords.gen(nu).name << ", " << prob.forms.names[a] << "] -> "
                            << prob.forms.names[c];
                        tags->push_back(tag.str());
                    }
                }
        }
    return out;
}

void substitute_table(CommutatorTable& t, const std::map<ParamId, Scalar>& b) {
    for (auto it = t.begin(); it != t.end();) {
        it->second = it->second.substitute(b);
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
    }
}

} // namespace

CalculusSolution solve_calculus(const CalculusProblem& prob, const SolveOptions& opts) {
    CalculusSolution sol;
    ConstraintSystem cs = generate_constraints(prob);
    LinSolution lin = solve_linear(cs.sys);
    if (!lin.consistent) {
        sol.cls = CalcClass::inconsistent;
        sol.note = "covariance/Leibniz system inconsistent at row: " + lin.offending;
        return sol;
    }

    std::vector<ParamId> frees;
    for (size_t i = 0; i < lin.nullspace.size(); ++i) frees.push_back(Params::fresh("q"));
    for (size_t v = 0; v < cs.unknowns.size(); ++v) {
        Scalar val = lin.particular[v];
        for (size_t i = 0; i < lin.nullspace.size(); ++i)
            val += lin.nullspace[i][v] * Scalar::param(frees[i]);
        if (!val.is_zero()) sol.linear_table[cs.unknowns[v]] = val;
    }
    sol.linear_unique = frees.empty();
    sol.table = sol.linear_table;

    // quadratic stage: eliminate the free parameters against the Jacobi rows
    std::vector<ParamId> remaining = frees;
    for (int guard = 0; guard < 200; ++guard) {
        std::vector<Scalar> res = jacobi_residuals(prob, sol.table);
        if (res.empty()) break;

        // prefer the residual of smallest degree in the free parameters
        size_t best = res.size();
        uint64_t best_deg = UINT64_MAX;
        for (size_t i = 0; i < res.size(); ++i) {
            uint64_t deg = 0;
            for (ParamId p : remaining) deg += res[i].num().degree_in(p);
            if (deg < best_deg) {
                best_deg = deg;
                best = i;
            }
        }
        if (best_deg == 0) {
            sol.cls = CalcClass::inconsistent;
            sol.note = "jacobi residual without free parameters: " + res[best].to_string();
            return sol;
        }
        const Scalar& r = res[best];
        // pick a parameter the residual is linear in
        ParamId pivot = 0;
        bool found = false;
        bool pivot_clean = false;
        for (ParamId p : remaining) {
            if (r.num().degree_in(p) != 1) continue;
            Poly lc = r.num().coeff_of(p, 1);
            bool clean = true;
            for (ParamId q : remaining)
                if (lc.degree_in(q) > 0) clean = false;
            if (!found || (clean && !pivot_clean)) {
                pivot = p;
                found = true;
                pivot_clean = clean;
            }
        }
        if (!found) {
            sol.cls = CalcClass::inconsistent;
            sol.note = "nonlinear residual in the free parameters: " + r.to_string();
            return sol;
        }
        Poly lc = r.num().coeff_of(pivot, 1);
        Poly rest = r.num() - lc * Poly::var(pivot);
        Scalar value = Scalar::canonicalize(-rest, lc);
        if (!pivot_clean)
            sol.note += std::string(sol.note.empty() ? "" : "; ") + "generic branch: divided by " +
                        Scalar::canonicalize(lc, Poly(1)).to_string();
        std::map<ParamId, Scalar> bind = {{pivot, value}};
        substitute_table(sol.table, bind);
        remaining.erase(std::remove(remaining.begin(), remaining.end(), pivot), remaining.end());
    }
    if (!jacobi_residuals(prob, sol.table).empty())
        throw error(errc::internal, "jacobi elimination did not converge");

    sol.free_params = remaining;
    sol.family_dim = (int)remaining.size();
    sol.cls = remaining.empty() ? CalcClass::unique : CalcClass::family;

    // gauge pins: impose the requested entries and eliminate matching frees
    for (auto& [key, want] : opts.gauge) {
        auto& [cn, an, bn] = key;
        GenId mu = prob.coords.gen_id(cn);
        int a = prob.forms.index_of(an);
        int b = prob.forms.index_of(bn);
        Scalar cur = table_entry(sol.table, mu, a, b);
        Scalar diff = cur - want;
        if (diff.is_zero()) continue;
        // diff = 0 iff its numerator vanishes; solve that for a free parameter
        ParamId pivot = 0;
        bool found = false;
        for (ParamId p : sol.free_params)
            if (diff.num().degree_in(p) == 1) {
                pivot = p;
                found = true;
                break;
            }
        if (!found) throw error(errc::validation, "gauge entry cannot be imposed");
        Poly lc = diff.num().coeff_of(pivot, 1);
        Poly rest = diff.num() - lc * Poly::var(pivot);
        Scalar value = Scalar::canonicalize(-rest, lc);
        std::map<ParamId, Scalar> bind = {{pivot, value}};
        substitute_table(sol.table, bind);
        sol.free_params.erase(std::remove(sol.free_params.begin(), sol.free_params.end(), pivot),
                              sol.free_params.end());
    }
    return sol;
}

CheckReport verify_candidate(const CalculusProblem& prob, const CommutatorTable& cand) {
    CheckReport rep{"calculus(" + prob.name + ")", {}};
    size_t nform = prob.forms.size();

    // covariance
    for (GenId g : prob.model.acting)
        for (GenId mu = 0; mu < prob.coords.size(); ++mu)
            for (int a = 0; a < (int)nform; ++a) {
                LhsDecomp dec = decompose_action(prob, g, mu, a);
                for (int cc = 0; cc < (int)nform; ++cc) {
                    Scalar r(0);
                    for (auto& [k, c] : dec.d) r += c * table_entry(cand, k.first, k.second, cc);
                    if (dec.e.count(cc)) r += dec.e.at(cc);
                    for (int b = 0; b < (int)nform; ++b) {
                        auto img = form_action_row(prob, g, b);
                        if (img.count(cc)) r -= table_entry(cand, mu, a, b) * img.at(cc);
                    }
                    std::ostringstream subj;
                    subj << prob.model.sym->alg.gen(g).name << " [" << prob.coords.gen(mu).name
                         << ", " << prob.forms.names[a] << "] -> " << prob.forms.names[cc];
                    if (!r.is_zero())
                        rep.add("covariance", subj.str(), false, r.to_string());
                }
                rep.add("covariance", prob.model.sym->alg.gen(g).name + " [" +
                                          prob.coords.gen(mu).name + ", " + prob.forms.names[a] + "]",
                        true);
            }

    // Leibniz
    for (GenId mu = 0; mu < prob.coords.size(); ++mu)
        for (GenId nu = 0; nu < mu; ++nu) {
            auto b = b_tensor(prob, mu, nu);
            int dmu = prob.forms.differential[mu];
            int dnu = prob.forms.differential[nu];
            for (int cc = 0; cc < (int)nform; ++cc) {
                Scalar r = table_entry(cand, mu, dnu, cc) - table_entry(cand, nu, dmu, cc);
                for (auto& [rho, k] : b)
                    if (prob.forms.differential[rho] == cc) r -= k;
                rep.add("leibniz",
                        "[" + prob.coords.gen(mu).name + ", " + prob.coords.gen(nu).name + "] -> " +
                            prob.forms.names[cc],
                        r.is_zero(), r.is_zero() ? "" : r.to_string());
            }
        }

    // Jacobi
    std::vector<std::string> tags;
    std::vector<Scalar> res = jacobi_residuals(prob, cand, &tags);
    if (res.empty())
        rep.add("jacobi", "all coordinate pairs", true);
    for (size_t i = 0; i < res.size(); ++i) rep.add("jacobi", tags[i], false, res[i].to_string());
    return rep;
}

// ---------------------------------------------------------------- basis change

namespace {

// invert a square matrix over the scalar field
std::vector<std::vector<Scalar>> invert(const std::vector<std::vector<Scalar>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Scalar>> a = m, inv(n, std::vector<Scalar>(n, Scalar(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t r = col; r < n; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv == n) throw error(errc::non_invertible_map, "basis change is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

std::pair<CalculusProblem, CommutatorTable> change_of_basis(const CalculusProblem& prob,
                                                            const CommutatorTable& table,
                                                            const BasisChange& map) {
    size_t nc = prob.coords.size();
    size_t nf = prob.forms.size();
    if (map.coord_order.size() != nc || map.form_order.size() != nf)
        throw error(errc::non_invertible_map, "basis change must preserve dimensions");

    // L[p][q]: new coordinate p in terms of old q; M[u][v]: new form u in old v
    std::vector<std::vector<Scalar>> L(nc, std::vector<Scalar>(nc, Scalar(0)));
    std::vector<std::vector<Scalar>> M(nf, std::vector<Scalar>(nf, Scalar(0)));
    for (size_t p = 0; p < nc; ++p) {
        auto it = map.coords.find(map.coord_order[p]);
        if (it == map.coords.end()) throw error(errc::non_invertible_map, "missing coordinate row");
        for (auto& [old_name, c] : it->second) L[p][prob.coords.gen_id(old_name)] = c;
    }
    for (size_t u = 0; u < nf; ++u) {
        auto it = map.forms.find(map.form_order[u]);
        if (it == map.forms.end()) throw error(errc::non_invertible_map, "missing form row");
        for (auto& [old_name, c] : it->second) M[u][prob.forms.index_of(old_name)] = c;
    }
    auto Linv = invert(L);
    auto Minv = invert(M);

    // new coordinate algebra
    std::vector<Generator> gens;
    for (size_t p = 0; p < nc; ++p)
        gens.push_back({map.coord_order[p], GenKind::ordinary, GenClass::translation, {}, ""});
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    for (size_t p = 0; p < nc; ++p)
        for (size_t r = 0; r < p; ++r) {
            // [n_p, n_r] = sum L L B, re-expressed through Linv
            std::map<GenId, Scalar> val;   // over old coordinates
            for (GenId q = 0; q < nc; ++q)
                for (GenId s = 0; s < nc; ++s) {
                    if (L[p][q].is_zero() || L[r][s].is_zero()) continue;
                    NcPoly br = prob.coords.bracket(prob.coords.of_gen(q), prob.coords.of_gen(s));
                    for (auto& [w, c] : br.terms()) {
                        if (w.size() != 1) throw error(errc::validation, "nonlinear bracket");
                        val[w[0].gen] += L[p][q] * L[r][s] * c;
                    }
                }
            std::vector<RawTerm> terms;
            for (size_t t = 0; t < nc; ++t) {
                Scalar c(0);
                for (auto& [rho, k] : val) c += k * Linv[rho][t];
                if (!c.is_zero()) terms.push_back({c, {{(GenId)t, 1}}});
            }
            if (!terms.empty())
                brackets[{map.coord_order[p], map.coord_order[r]}] = std::move(terms);
        }
    CalculusProblem out;
    out.name = prob.name + "'";
    out.coords = Algebra::build(out.name + "-coords", gens, brackets);
    out.forms.names = map.form_order;
    out.forms.differential.assign(nc, -1);
    for (size_t p = 0; p < nc; ++p) out.forms.differential[p] = map.new_differential[p];
    for (size_t u = 0; u < nf; ++u)
        if (std::find(map.new_differential.begin(), map.new_differential.end(), (int)u) ==
            map.new_differential.end())
            out.forms.extras.push_back((int)u);
    out.model.sym = prob.model.sym;
    out.model.acting = prob.model.acting;

    // transformed actions: h |> n_p = sum L (h |> old), rewritten in new letters
    auto rewrite = [&](const CFExpr& e) {
        CFExpr r;
        for (auto& [w, c] : e.terms()) {
            if (w.empty()) {
                r.add(w, c);
                continue;
            }
            if (w.size() != 1) throw error(errc::validation, "action entries must be degree <= 1");
            if (!w[0].is_form) {
                for (size_t t = 0; t < nc; ++t) {
                    Scalar k = c * Linv[w[0].id][t];
                    if (!k.is_zero()) r.add({CFLetter{false, (uint16_t)t}}, k);
                }
            } else {
                for (size_t t = 0; t < nf; ++t) {
                    Scalar k = c * Minv[w[0].id][t];
                    if (!k.is_zero()) r.add({CFLetter{true, (uint16_t)t}}, k);
                }
            }
        }
        return r;
    };
    for (GenId g : prob.model.acting) {
        for (size_t p = 0; p < nc; ++p) {
            CFExpr img;
            for (GenId q = 0; q < nc; ++q) {
                if (L[p][q].is_zero()) continue;
                img = img + prob.model.on_coord.at({g, q}).scaled(L[p][q]);
            }
            out.model.on_coord[{g, (GenId)p}] = rewrite(img);
        }
        for (int u : out.forms.extras) {
            CFExpr img;
            for (size_t v = 0; v < nf; ++v) {
                if (M[u][v].is_zero()) continue;
                CFExpr old_img = act_single(prob, g, CFLetter{true, (uint16_t)v});
                img = img + old_img.scaled(M[u][v]);
            }
            out.model.on_extra_form[{g, (uint16_t)u}] = rewrite(img);
        }
    }

    // transformed commutator table
    CommutatorTable nt;
    for (size_t p = 0; p < nc; ++p)
        for (size_t u = 0; u < nf; ++u)
            for (size_t w = 0; w < nf; ++w) {
                Scalar val(0);
                for (GenId q = 0; q < nc; ++q)
                    for (size_t v = 0; v < nf; ++v) {
                        if (L[p][q].is_zero() || M[u][v].is_zero()) continue;
                        for (size_t bold = 0; bold < nf; ++bold) {
                            Scalar t = table_entry(table, q, (int)v, (int)bold);
                            if (t.is_zero()) continue;
                            val += L[p][q] * M[u][v] * t * Minv[bold][w];
                        }
                    }
                if (!val.is_zero()) nt[{(GenId)p, (int)u, (int)w}] = val;
            }
    return {std::move(out), std::move(nt)};
}

// ---------------------------------------------------------------- invariance

CheckReport invariance_check(const CalculusProblem& prob, const NcPoly& elem,
                             const std::vector<GenId>& gens) {
    CheckReport rep{"invariance(" + prob.name + ")", {}};
    const std::vector<GenId>& set = gens.empty() ? prob.model.acting : gens;

    auto to_nc = [&](const CFExpr& e) {
        std::vector<RawTerm> raw;
        for (auto& [w, c] : e.terms()) {
            RawTerm t{c, {}};
            for (auto& l : w) {
                if (l.is_form) throw error(errc::internal, "form letter in coordinate element");
                t.word.push_back({l.id, 1});
            }
            raw.push_back(std::move(t));
        }
        return prob.coords.normal_form(raw);
    };

    for (GenId g : set) {
        CFExpr img;
        for (auto& [w, c] : elem.terms()) {
            CFWord cw;
            for (auto& f : w)
                for (int32_t i = 0; i < f.exp; ++i) cw.push_back(CFLetter{false, (uint16_t)f.gen});
            img = img + left_act(prob, prob.model.sym->alg.of_gen(g), cw).scaled(c);
        }
        NcPoly r = to_nc(img) - elem.scaled(prob.model.sym->eps(g));
        rep.add("invariant", prob.model.sym->alg.gen(g).name, r.is_zero(),
                r.is_zero() ? "" : r.to_string(prob.coords));
    }
    for (GenId x = 0; x < prob.coords.size(); ++x) {
        NcPoly r = prob.coords.bracket(elem, prob.coords.of_gen(x));
        rep.add("central", prob.coords.gen(x).name, r.is_zero(),
                r.is_zero() ? "" : r.to_string(prob.coords));
    }
    return rep;
}

// ---------------------------------------------------------------- problems

namespace {

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

CFLetter co(uint16_t id) { return CFLetter{false, id}; }
CFLetter fo(uint16_t id) { return CFLetter{true, id}; }

CFExpr cf_const(const Scalar& c) { return CFExpr(c); }

struct ProblemBuilder {
    CalculusProblem prob;
    std::map<std::string, GenId> coord_ids;

    void coords(const std::vector<std::string>& names,
                std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets) {
        std::vector<Generator> gens;
        for (auto& n : names) {
            coord_ids[n] = (GenId)gens.size();
            gens.push_back({n, GenKind::ordinary, GenClass::translation, {}, ""});
        }
        prob.coords = Algebra::build(prob.name + "-coords", gens, brackets);
        // the structure tensor must satisfy the Jacobi identity
        for (GenId a = 0; a < prob.coords.size(); ++a)
            for (GenId b = (GenId)(a + 1); b < prob.coords.size(); ++b)
                for (GenId c = (GenId)(b + 1); c < prob.coords.size(); ++c) {
                    NcPoly pa = prob.coords.of_gen(a), pb = prob.coords.of_gen(b),
                           pc = prob.coords.of_gen(c);
                    NcPoly r = prob.coords.bracket(prob.coords.bracket(pa, pb), pc) +
                               prob.coords.bracket(prob.coords.bracket(pb, pc), pa) +
                               prob.coords.bracket(prob.coords.bracket(pc, pa), pb);
                    if (!r.is_zero())
                        throw error(errc::validation,
                                    "coordinate brackets violate the Jacobi identity in " +
                                        prob.name);
                }
        for (auto& n : names) {
            prob.forms.differential.push_back((int)prob.forms.names.size());
            prob.forms.names.push_back("d" + n);
        }
    }

    void extra_form(const std::string& name) {
        prob.forms.extras.push_back((int)prob.forms.names.size());
        prob.forms.names.push_back(name);
    }

    void sym(const std::string& registry_name) {
        prob.model.sym = &registry_get(registry_name);
        for (GenId g = 0; g < prob.model.sym->alg.size(); ++g)
            if (prob.model.sym->alg.gen(g).kind == GenKind::ordinary)
                prob.model.acting.push_back(g);
    }

    GenId sgen(const std::string& n) const { return prob.model.sym->alg.gen_id(n); }

    void act(const std::string& g, const std::string& coord, const CFExpr& v) {
        prob.model.on_coord[{sgen(g), coord_ids.at(coord)}] = v;
    }
    void act_form(const std::string& g, const std::string& form, const CFExpr& v) {
        prob.model.on_extra_form[{sgen(g), (uint16_t)prob.forms.index_of(form)}] = v;
    }
};

std::string idx(const std::string& b, int i) { return b + std::to_string(i); }

// shared rotation + boost + translation-dual action table on (x_i, time)
void galilean_style_actions(ProblemBuilder& b, const std::string& rot, const std::string& boost,
                            const std::string& strans, const std::string& ttrans,
                            const std::string& time) {
    for (int i = 1; i <= 3; ++i) {
        b.act(idx(rot, i), time, CFExpr());
        b.act(idx(boost, i), time, CFExpr());
        for (int j = 1; j <= 3; ++j) {
            CFExpr jm;
            for (int k = 1; k <= 3; ++k)
                if (int e = eps3(i, j, k)) jm.add({co(b.coord_ids.at(idx("x", k)))}, Scalar(e));
            b.act(idx(rot, i), idx("x", j), jm);
            CFExpr vm;
            if (i == j) vm.add({co(b.coord_ids.at(time))}, Scalar(-1));
            b.act(idx(boost, i), idx("x", j), vm);
            b.act(idx(strans, i), idx("x", j), cf_const(Scalar(i == j ? 1 : 0)));
        }
        b.act(idx(strans, i), time, CFExpr());
    }
    b.act(ttrans, time, cf_const(Scalar(1)));
    for (int i = 1; i <= 3; ++i) b.act(ttrans, idx("x", i), CFExpr());
}

void add_phi(ProblemBuilder& b) {
    b.extra_form("phi");
    for (GenId g : b.prob.model.acting)
        b.prob.model.on_extra_form[{g, (uint16_t)b.prob.forms.index_of("phi")}] = CFExpr();
}

// boost-covariant one-form: boost_i |> varphi = scale * dx_i, all else zero
void add_varphi(ProblemBuilder& b, const std::string& boost, const Scalar& scale) {
    b.extra_form("varphi");
    uint16_t f = (uint16_t)b.prob.forms.index_of("varphi");
    for (GenId g : b.prob.model.acting) b.prob.model.on_extra_form[{g, f}] = CFExpr();
    for (int i = 1; i <= 3; ++i) {
        CFExpr v;
        v.add({fo((uint16_t)b.prob.forms.differential[b.coord_ids.at(idx("x", i))])}, scale);
        b.act_form(idx(boost, i), "varphi", v);
    }
}

CalculusProblem make_kappa_minkowski(const std::vector<std::string>& extras) {
    Scalar k = sp(Params::kappa), m = sp(Params::m), c = sp(Params::c);
    ProblemBuilder b;
    b.prob.name = "kappa-minkowski";
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> br;
    for (int i = 1; i <= 3; ++i)
        br[{"x0", idx("x", i)}] = {{-Scalar(1) / k, {{(GenId)(i - 1), 1}}}};
    b.coords({"x1", "x2", "x3", "x0"}, br);
    b.sym("poincare-kappa");
    galilean_style_actions(b, "M", "N", "P", "P0", "x0");
    // boosts act on x_i with the time coordinate, on x0 with -x_i
    for (int i = 1; i <= 3; ++i) {
        CFExpr v;
        v.add({co(b.coord_ids.at(idx("x", i)))}, Scalar(-1));
        b.act(idx("N", i), "x0", v);
    }
    for (auto& e : extras) {
        if (e == "phi")
            add_phi(b);
        else if (e == "varphi")
            add_varphi(b, "N", m * c);
        else
            throw error(errc::validation, "unknown extra form " + e);
    }
    return std::move(b.prob);
}

CalculusProblem make_kappa_minkowski_ext(const std::vector<std::string>& extras) {
    Scalar k = sp(Params::kappa), m = sp(Params::m), c = sp(Params::c);
    ProblemBuilder b;
    b.prob.name = "kappa-minkowski-ext";
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> br;
    for (int i = 1; i <= 3; ++i) {
        br[{"x0", idx("x", i)}] = {{-Scalar(1) / k, {{(GenId)(i - 1), 1}}}};
        br[{"chi", idx("x", i)}] = {{m * c / k, {{(GenId)(i - 1), 1}}}};
    }
    b.coords({"x1", "x2", "x3", "chi", "x0"}, br);
    b.sym("poincare-kappa-ext");
    galilean_style_actions(b, "M", "N", "P", "P0", "x0");
    for (int i = 1; i <= 3; ++i) {
        CFExpr v;
        v.add({co(b.coord_ids.at(idx("x", i)))}, Scalar(-1));
        b.act(idx("N", i), "x0", v);
        CFExpr nchi;
        nchi.add({co(b.coord_ids.at(idx("x", i)))}, m * c);
        b.act(idx("N", i), "chi", nchi);
        b.act(idx("M", i), "chi", CFExpr());
        b.act(idx("P", i), "chi", CFExpr());
    }
    b.act("P0", "chi", CFExpr());
    b.act("Xi", "chi", cf_const(Scalar(1)));
    for (int i = 1; i <= 3; ++i) b.act("Xi", idx("x", i), CFExpr());
    b.act("Xi", "x0", CFExpr());
    for (auto& e : extras) throw error(errc::validation, "unknown extra form " + e);
    return std::move(b.prob);
}

CalculusProblem make_newton_kappa_tilde(const std::vector<std::string>& extras) {
    Scalar kt = sp(Params::kappa_tilde), m = sp(Params::m);
    ProblemBuilder b;
    b.prob.name = "newton-kappa-tilde";
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> br;
    for (int i = 1; i <= 3; ++i)
        br[{"t", idx("x", i)}] = {{-Scalar(1) / kt, {{(GenId)(i - 1), 1}}}};
    b.coords({"x1", "x2", "x3", "t"}, br);
    b.sym("galilei-kappa-tilde");
    galilean_style_actions(b, "J", "V", "X", "Xt", "t");
    for (auto& e : extras) {
        if (e == "phi")
            add_phi(b);
        else if (e == "varphi")
            add_varphi(b, "V", m);
        else
            throw error(errc::validation, "unknown extra form " + e);
    }
    return std::move(b.prob);
}

CalculusProblem make_newton_ext_kappa_hat(const std::vector<std::string>& extras) {
    Scalar kh = sp(Params::kappa_hat), m = sp(Params::m);
    ProblemBuilder b;
    b.prob.name = "newton-ext-kappa-hat";
    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> br;
    for (int i = 1; i <= 3; ++i)
        br[{"chi", idx("x", i)}] = {{m / kh, {{(GenId)(i - 1), 1}}}};
    b.coords({"x1", "x2", "x3", "chi", "t"}, br);
    b.sym("galilei-ext-kappa-hat");
    galilean_style_actions(b, "J", "V", "X", "Xt", "t");
    for (int i = 1; i <= 3; ++i) {
        CFExpr vchi;
        vchi.add({co(b.coord_ids.at(idx("x", i)))}, m);
        b.act(idx("V", i), "chi", vchi);
        b.act(idx("J", i), "chi", CFExpr());
        b.act(idx("X", i), "chi", CFExpr());
    }
    b.act("Xt", "chi", CFExpr());
    b.act("Xi", "chi", cf_const(Scalar(1)));
    for (int i = 1; i <= 3; ++i) b.act("Xi", idx("x", i), CFExpr());
    b.act("Xi", "t", CFExpr());
    for (auto& e : extras) throw error(errc::validation, "unknown extra form " + e);
    return std::move(b.prob);
}

CalculusProblem make_galilei_classical(const std::vector<std::string>& extras) {
    ProblemBuilder b;
    b.prob.name = "galilei-classical-spacetime";
    b.coords({"x1", "x2", "x3", "t"}, {});
    b.sym("galilei-classical");
    galilean_style_actions(b, "J", "V", "X", "Xt", "t");
    for (auto& e : extras) {
        if (e == "phi")
            add_phi(b);
        else
            throw error(errc::validation, "unknown extra form " + e);
    }
    return std::move(b.prob);
}

} // namespace

CalculusProblem calculus_problem(const std::string& spacetime,
                                 const std::vector<std::string>& extra_forms) {
    if (spacetime == "kappa-minkowski") return make_kappa_minkowski(extra_forms);
    if (spacetime == "kappa-minkowski-ext") return make_kappa_minkowski_ext(extra_forms);
    if (spacetime == "newton-kappa-tilde") return make_newton_kappa_tilde(extra_forms);
    if (spacetime == "newton-ext-kappa-hat") return make_newton_ext_kappa_hat(extra_forms);
    if (spacetime == "galilei-classical") return make_galilei_classical(extra_forms);
    throw error(errc::unknown_algebra, "unknown spacetime: " + spacetime);
}

std::vector<std::string> spacetime_names() {
    return {"kappa-minkowski", "kappa-minkowski-ext", "newton-kappa-tilde", "newton-ext-kappa-hat",
            "galilei-classical"};
}

} // namespace kappa

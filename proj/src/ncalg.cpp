#include "kappa/ncalg.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace kappa {

// ---------------------------------------------------------------- words

int64_t word_degree(const Word& w) {
    int64_t d = 0;
    for (auto& f : w)
        if (f.exp > 0) d += f.exp;   // group-like powers may be negative; they carry degree 0 anyway
    return d;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
    int64_t da = word_degree(a), db = word_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].gen != b[i].gen) return a[i].gen < b[i].gen;
        if (a[i].exp != b[i].exp) return a[i].exp < b[i].exp;
    }
    return false;
}

// ---------------------------------------------------------------- NcPoly

NcPoly::NcPoly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

void NcPoly::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    for (auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    NcPoly r = *this;
    for (auto& [w, c] : o.terms_) r.add(w, -c);
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r;
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

int64_t NcPoly::max_degree() const {
    int64_t d = 0;
    for (auto& [w, c] : terms_) d = std::max(d, word_degree(w));
    return d;
}

std::string NcPoly::to_string(const Algebra& alg) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.to_string();
        if (!it->first.empty()) os << " " << alg.word_to_string(it->first);
    }
    return os.str();
}

// ---------------------------------------------------------------- TensorElem

void TensorElem::add(const std::vector<Word>& slots, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(slots);
    if (it == terms_.end()) {
        terms_.emplace(slots, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
    TensorElem r = *this;
    for (auto& [s, c] : o.terms_) r.add(s, c);
    return r;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
    TensorElem r = *this;
    for (auto& [s, c] : o.terms_) r.add(s, -c);
    return r;
}

TensorElem TensorElem::scaled(const Scalar& c) const {
    TensorElem r(rank_);
    if (c.is_zero()) return r;
    for (auto& [s, k] : terms_) r.terms_.emplace(s, k * c);
    return r;
}

std::string TensorElem::to_string(const Algebra& alg) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [slots, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (size_t i = 0; i < slots.size(); ++i) {
            os << (i ? " (x) " : " ");
            os << (slots[i].empty() ? "1" : alg.word_to_string(slots[i]));
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- Algebra

Algebra Algebra::build(std::string name,
                       std::vector<Generator> gens,
                       std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets) {
    Algebra a;
    a.name_ = std::move(name);
    a.gens_ = std::move(gens);
    for (GenId i = 0; i < a.gens_.size(); ++i) {
        if (a.index_.count(a.gens_[i].name))
            throw error(errc::validation, "duplicate generator name: " + a.gens_[i].name);
        a.index_.emplace(a.gens_[i].name, i);
    }
    for (size_t i = 0; i + 1 < a.gens_.size(); ++i)
        if ((uint8_t)a.gens_[i].klass > (uint8_t)a.gens_[i + 1].klass)
            throw error(errc::validation, "generators not in class-sorted rank order in " + a.name_);
    for (auto& g : a.gens_) {
        bool is_exp_class = g.klass == GenClass::exponential;
        bool is_gl = g.kind == GenKind::grouplike;
        if (is_exp_class != is_gl)
            throw error(errc::validation, "group-like generators must occupy the exponential class: " + g.name);
    }

    // Store bracket entries as swap remainders keyed (hi, lo); accepts either
    // argument order in the input and flips the sign as needed.
    for (auto& [key, raw] : brackets) {
        GenId b = a.gen_id(key.first);
        GenId g = a.gen_id(key.second);
        if (b == g) throw error(errc::validation, "bracket of a generator with itself: " + key.first);
        bool flip = b < g;
        GenId hi = flip ? g : b, lo = flip ? b : g;
        NcPoly r;
        for (auto& t : raw) {
            Word w;
            for (auto& f : t.word) {
                if (f.exp == 0) continue;
                if (a.gens_[f.gen].kind == GenKind::ordinary && f.exp < 0)
                    throw error(errc::validation, "negative power of ordinary generator");
                if (!w.empty() && w.back().gen >= f.gen)
                    throw error(errc::validation, "relation entry not normal-ordered in " + a.name_);
                w.push_back(f);
            }
            r.add(w, flip ? -t.coeff : t.coeff);
        }
        if (a.rem_.count({hi, lo}))
            throw error(errc::validation, "duplicate bracket entry in " + a.name_);
        if (!r.is_zero()) a.rem_.emplace(std::make_pair(hi, lo), std::move(r));
    }

    a.derive_grouplike_rows();
    a.validate();
    return a;
}

GenId Algebra::gen_id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw error(errc::unknown_generator, "unknown generator '" + name + "' in " + name_);
    return it->second;
}

bool Algebra::has_gen(const std::string& name) const { return index_.count(name) > 0; }

const NcPoly& Algebra::remainder(GenId hi, GenId lo) const {
    auto it = rem_.find({hi, lo});
    return it == rem_.end() ? zero_ : it->second;
}

const NcPoly& Algebra::grouplike_remainder(GenId h, GenId f) const {
    auto it = glrem_.find({h, f});
    return it == glrem_.end() ? zero_ : it->second;
}

void Algebra::derive_grouplike_rows() {
    for (GenId f = 0; f < gens_.size(); ++f) {
        if (gens_[f].kind != GenKind::grouplike) continue;
        for (GenId h = 0; h < gens_.size(); ++h) {
            if (gens_[h].kind != GenKind::ordinary) continue;
            NcPoly acc;
            for (auto& [prim, rate] : gens_[f].exponent.terms) {
                GenId g = gen_id(prim);
                if (gens_[g].kind != GenKind::ordinary)
                    throw error(errc::validation, "group-like exponent references non-ordinary generator " + prim);
                // [h, g] from the stored table
                NcPoly hg;
                if (h > g) hg = remainder(h, g);
                else if (g > h) hg = -remainder(g, h);
                acc = acc + hg.scaled(rate);
            }
            if (!acc.is_zero()) glrem_.emplace(std::make_pair(h, f), std::move(acc));
        }
    }
}

NcPoly Algebra::normal_form(const std::vector<RawTerm>& input) const {
    return normal_form_impl(input, Strategy::leftmost);
}

NcPoly Algebra::normal_form_impl(const std::vector<RawTerm>& input, Strategy strat) const {
    NcPoly result;
    std::deque<RawTerm> work;
    for (auto& t : input) {
        if (t.coeff.is_zero()) continue;
        RawTerm c = t;
        c.word.erase(std::remove_if(c.word.begin(), c.word.end(),
                                    [](const Factor& f) { return f.exp == 0; }),
                     c.word.end());
        work.push_back(std::move(c));
    }
    uint64_t steps = 0;

    auto find_redex = [&](const std::vector<Factor>& w) -> long {
        if (w.size() < 2) return -1;
        if (strat == Strategy::leftmost) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i].gen >= w[i + 1].gen) return (long)i;
        } else {
            for (size_t i = w.size() - 1; i-- > 0;)
                if (w[i].gen >= w[i + 1].gen) return (long)i;
        }
        return -1;
    };

    while (!work.empty()) {
        RawTerm t = std::move(work.front());
        work.pop_front();
        if (t.coeff.is_zero()) continue;
        long idx = find_redex(t.word);
        if (idx < 0) {
            for (auto& f : t.word)
                if (gens_[f.gen].kind == GenKind::ordinary && f.exp < 0)
                    throw error(errc::internal, "negative ordinary power produced during rewriting");
            result.add(t.word, t.coeff);
            continue;
        }
        if (++steps > step_budget)
            throw error(errc::non_terminating,
                        "normal_form exceeded its step budget in " + name_ + " (invalid relation table?)");

        size_t i = (size_t)idx;
        Factor L = t.word[i], R = t.word[i + 1];

        if (L.gen == R.gen) {
            // merge adjacent powers
            RawTerm t2 = t;
            t2.word[i].exp += R.exp;
            t2.word.erase(t2.word.begin() + i + 1);
            if (t2.word[i].exp == 0) t2.word.erase(t2.word.begin() + i);
            work.push_back(std::move(t2));
            continue;
        }

        const Generator& gl = gens_[L.gen];
        const Generator& gr = gens_[R.gen];

        if (gl.kind == GenKind::grouplike && gr.kind == GenKind::grouplike) {
            // distinct group-likes commute (validated at build)
            RawTerm t2 = t;
            std::swap(t2.word[i], t2.word[i + 1]);
            work.push_back(std::move(t2));
            continue;
        }
        if (gl.kind == GenKind::grouplike)
            throw error(errc::internal, "group-like generator ranked above an ordinary one");

        if (gr.kind == GenKind::grouplike) {
            // b^e * F^k  ->  b^(e-1) * F^k * b  +  k * b^(e-1) * glrem * F^k
            const NcPoly& glr = grouplike_remainder(L.gen, R.gen);
            RawTerm swapped;
            swapped.coeff = t.coeff;
            swapped.word.assign(t.word.begin(), t.word.begin() + i);
            if (L.exp > 1) swapped.word.push_back({L.gen, L.exp - 1});
            swapped.word.push_back(R);
            swapped.word.push_back({L.gen, 1});
            swapped.word.insert(swapped.word.end(), t.word.begin() + i + 2, t.word.end());
            work.push_back(std::move(swapped));
            for (auto& [w, c] : glr.terms()) {
                RawTerm rt;
                rt.coeff = t.coeff * c * Scalar(R.exp);
                rt.word.assign(t.word.begin(), t.word.begin() + i);
                if (L.exp > 1) rt.word.push_back({L.gen, L.exp - 1});
                rt.word.insert(rt.word.end(), w.begin(), w.end());
                rt.word.push_back(R);
                rt.word.insert(rt.word.end(), t.word.begin() + i + 2, t.word.end());
                work.push_back(std::move(rt));
            }
            continue;
        }

        // ordinary/ordinary swap: b^e * a^f -> b^(e-1) (a b) a^(f-1) + b^(e-1) R(b,a) a^(f-1)
        const NcPoly& r = remainder(L.gen, R.gen);
        RawTerm swapped;
        swapped.coeff = t.coeff;
        swapped.word.assign(t.word.begin(), t.word.begin() + i);
        if (L.exp > 1) swapped.word.push_back({L.gen, L.exp - 1});
        swapped.word.push_back({R.gen, 1});
        swapped.word.push_back({L.gen, 1});
        if (R.exp > 1) swapped.word.push_back({R.gen, R.exp - 1});
        swapped.word.insert(swapped.word.end(), t.word.begin() + i + 2, t.word.end());
        work.push_back(std::move(swapped));
        for (auto& [w, c] : r.terms()) {
            RawTerm rt;
            rt.coeff = t.coeff * c;
            rt.word.assign(t.word.begin(), t.word.begin() + i);
            if (L.exp > 1) rt.word.push_back({L.gen, L.exp - 1});
            rt.word.insert(rt.word.end(), w.begin(), w.end());
            if (R.exp > 1) rt.word.push_back({R.gen, R.exp - 1});
            rt.word.insert(rt.word.end(), t.word.begin() + i + 2, t.word.end());
            work.push_back(std::move(rt));
        }
    }
    return result;
}

NcPoly Algebra::mul(const NcPoly& a, const NcPoly& b) const {
    std::vector<RawTerm> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) {
            RawTerm t;
            t.coeff = ca * cb;
            t.word = wa;
            t.word.insert(t.word.end(), wb.begin(), wb.end());
            raw.push_back(std::move(t));
        }
    return normal_form(raw);
}

NcPoly Algebra::bracket(const NcPoly& a, const NcPoly& b) const {
    std::vector<RawTerm> raw;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) {
            RawTerm ab;
            ab.coeff = ca * cb;
            ab.word = wa;
            ab.word.insert(ab.word.end(), wb.begin(), wb.end());
            raw.push_back(std::move(ab));
            RawTerm ba;
            ba.coeff = -(ca * cb);
            ba.word = wb;
            ba.word.insert(ba.word.end(), wa.begin(), wa.end());
            raw.push_back(std::move(ba));
        }
    return normal_form(raw);
}

NcPoly Algebra::pow(const NcPoly& a, uint32_t n) const {
    NcPoly r = NcPoly::one();
    for (uint32_t i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

TensorElem Algebra::tensor_mul(const TensorElem& a, const TensorElem& b) const {
    if (a.rank() != b.rank()) throw error(errc::internal, "tensor rank mismatch");
    std::vector<std::pair<Scalar, std::vector<std::vector<Factor>>>> raw;
    for (auto& [sa, ca] : a.terms())
        for (auto& [sb, cb] : b.terms()) {
            std::vector<std::vector<Factor>> slots(a.rank());
            for (int i = 0; i < a.rank(); ++i) {
                slots[i] = sa[i];
                slots[i].insert(slots[i].end(), sb[i].begin(), sb[i].end());
            }
            raw.push_back({ca * cb, std::move(slots)});
        }
    return tensor_nf(a.rank(), raw);
}

TensorElem Algebra::tensor_nf(int rank,
                              const std::vector<std::pair<Scalar, std::vector<std::vector<Factor>>>>& raw) const {
    TensorElem out(rank);
    for (auto& [c, slots] : raw) {
        if ((int)slots.size() != rank) throw error(errc::internal, "tensor slot count mismatch");
        // normalize each slot independently, then distribute
        std::vector<NcPoly> nf_slots;
        nf_slots.reserve(rank);
        for (auto& s : slots) {
            RawTerm t;
            t.coeff = Scalar(1);
            t.word = s;
            nf_slots.push_back(normal_form({t}));
        }
        std::vector<std::pair<std::vector<Word>, Scalar>> partial = {{{}, c}};
        for (auto& np : nf_slots) {
            std::vector<std::pair<std::vector<Word>, Scalar>> next;
            for (auto& [ws, cc] : partial)
                for (auto& [w, k] : np.terms()) {
                    auto ws2 = ws;
                    ws2.push_back(w);
                    next.push_back({std::move(ws2), cc * k});
                }
            partial = std::move(next);
        }
        for (auto& [ws, cc] : partial) out.add(ws, cc);
    }
    return out;
}

NcPoly Algebra::of_word(const std::vector<Factor>& w, const Scalar& c) const {
    RawTerm t;
    t.coeff = c;
    t.word = w;
    return normal_form({t});
}

NcPoly Algebra::of_gen(GenId g, int32_t e) const { return of_word({{g, e}}); }

int64_t Algebra::ordinary_degree(const Word& w) const {
    int64_t d = 0;
    for (auto& f : w)
        if (gens_[f.gen].kind == GenKind::ordinary) d += f.exp;
    return d;
}

NcPoly Algebra::of_gen(const std::string& name, int32_t e) const { return of_gen(gen_id(name), e); }

NcPoly Algebra::expand_grouplike(const NcPoly& p, uint32_t order) const {
    auto series = [&](GenId f, int32_t k) -> NcPoly {
        NcPoly x;   // k * exponent
        for (auto& [prim, rate] : gens_[f].exponent.terms)
            x.add({{gen_id(prim), 1}}, rate * Scalar(k));
        NcPoly s = NcPoly::one();
        NcPoly term = NcPoly::one();
        Rat fact(1);
        for (uint32_t n = 1; n <= order; ++n) {
            term = mul(term, x);
            fact = fact * Rat((long long)n);
            s = s + term.scaled(Scalar(Rat(1) / fact));
        }
        return s;
    };
    NcPoly out;
    for (auto& [w, c] : p.terms()) {
        NcPoly acc(c);
        for (auto& f : w) {
            if (gens_[f.gen].kind == GenKind::grouplike)
                acc = mul(acc, series(f.gen, f.exp));
            else
                acc = mul(acc, of_word({f}));
        }
        out = out + acc;
    }
    return out;
}

Algebra::ProbeResult Algebra::confluence_probe(uint32_t degree, int samples, uint64_t seed) const {
    ProbeResult pr;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gen_pick(0, (int)gens_.size() - 1);
    std::uniform_int_distribution<int> len_pick(2, (int)std::max<uint32_t>(degree, 2));
    std::uniform_int_distribution<int> exp_pick(1, 2);
    std::uniform_int_distribution<int> sign_pick(0, 1);
    for (int s = 0; s < samples; ++s) {
        RawTerm t;
        t.coeff = Scalar(1);
        int len = len_pick(rng);
        int64_t deg = 0;
        for (int i = 0; i < len && deg < (int64_t)degree; ++i) {
            GenId g = (GenId)gen_pick(rng);
            int e = exp_pick(rng);
            if (gens_[g].kind == GenKind::grouplike && sign_pick(rng)) e = -e;
            t.word.push_back({g, e});
            if (gens_[g].kind == GenKind::ordinary) deg += e;
        }
        ++pr.samples;
        NcPoly a = normal_form_impl({t}, Strategy::leftmost);
        NcPoly b = normal_form_impl({t}, Strategy::rightmost);
        if (!(a == b)) {
            std::ostringstream os;
            os << "strategy mismatch on word";
            for (auto& f : t.word) os << " " << gens_[f.gen].name << "^" << f.exp;
            pr.mismatches.push_back(os.str());
        }
    }
    return pr;
}

std::string Algebra::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& f : w) {
        if (!first) os << " ";
        first = false;
        os << gens_[f.gen].name;
        if (f.exp != 1) os << "^" << f.exp;
    }
    return os.str();
}

void Algebra::validate() const {
    // relation entries must be normal-form fixed points
    for (auto& [key, r] : rem_) {
        std::vector<RawTerm> raw;
        for (auto& [w, c] : r.terms()) raw.push_back({c, w});
        if (!(normal_form(raw) == r))
            throw error(errc::validation, "relation entry not in normal form: [" +
                                              gens_[key.first].name + ", " + gens_[key.second].name +
                                              "] in " + name_);
    }
    // group-like side conditions
    for (GenId f = 0; f < gens_.size(); ++f) {
        if (gens_[f].kind != GenKind::grouplike) continue;
        auto& ex = gens_[f].exponent.terms;
        if (ex.empty())
            throw error(errc::validation, "group-like generator with empty exponent: " + gens_[f].name);
        for (auto& [p1, r1] : ex)
            for (auto& [p2, r2] : ex) {
                GenId a = gen_id(p1), b = gen_id(p2);
                if (a != b && !bracket(of_gen(a), of_gen(b)).is_zero())
                    throw error(errc::validation, "group-like exponent generators do not commute in " + name_);
            }
        // [h, g_j] must commute with every exponent generator
        for (GenId h = 0; h < gens_.size(); ++h) {
            if (gens_[h].kind != GenKind::ordinary) continue;
            const NcPoly& glr = grouplike_remainder(h, f);
            if (glr.is_zero()) continue;
            for (auto& [prim, rate] : ex) {
                NcPoly g = of_gen(prim);
                if (!bracket(glr, g).is_zero())
                    throw error(errc::validation,
                                "group-like swap rule invalid for (" + gens_[h].name + ", " + gens_[f].name +
                                    ") in " + name_);
            }
        }
    }
}

} // namespace kappa

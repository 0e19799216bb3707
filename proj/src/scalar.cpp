#include "kappa/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace kappa {

// ---------------------------------------------------------------- Mono

uint64_t Mono::total_degree() const {
    uint64_t d = 0;
    for (auto& [p, e] : factors) d += e;
    return d;
}

uint32_t Mono::degree_in(ParamId p) const {
    for (auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

Mono Mono::var(ParamId p, uint32_t e) {
    Mono m;
    if (e) m.factors.push_back({p, e});
    return m;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first))
            r.factors.push_back(factors[i++]);
        else if (i == factors.size() || o.factors[j].first < factors[i].first)
            r.factors.push_back(o.factors[j++]);
        else {
            r.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
            ++i; ++j;
        }
    }
    return r;
}

bool Mono::divisible_by(const Mono& o) const {
    for (auto& [p, e] : o.factors)
        if (degree_in(p) < e) return false;
    return true;
}

Mono Mono::operator/(const Mono& o) const {
    Mono r;
    for (auto& [p, e] : factors) {
        uint32_t d = o.degree_in(p);
        if (e > d) r.factors.push_back({p, e - d});
    }
    return r;
}

Mono Mono::without(ParamId p) const {
    Mono r;
    for (auto& f : factors)
        if (f.first != p) r.factors.push_back(f);
    return r;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same degree: scan ids ascending; bigger exponent on the earliest
    // differing id means the bigger monomial.
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first != b.factors[j].first)
            return a.factors[i].first > b.factors[j].first;   // b has the earlier id => a < b
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second < b.factors[j].second;
        ++i; ++j;
    }
    return i == a.factors.size() && j != b.factors.size();
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Mono::one(), c);
}

Poly Poly::var(ParamId p, uint32_t e) {
    Poly r;
    r.terms_.emplace(Mono::var(p, e), Rat(1));
    return r;
}

Poly Poly::term(const Rat& c, const Mono& m) {
    Poly r;
    if (!c.is_zero()) r.terms_.emplace(m, c);
    return r;
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

void Poly::insert(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.insert(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.insert(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_)
            r.insert(m1 * m2, c1 * c2);
    return r;
}

uint32_t Poly::degree_in(ParamId p) const {
    uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(p));
    return d;
}

Poly Poly::coeff_of(ParamId p, uint32_t k) const {
    Poly r;
    for (auto& [m, c] : terms_)
        if (m.degree_in(p) == k) r.insert(m.without(p), c);
    return r;
}

uint64_t Poly::total_degree() const {
    uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const Mono& Poly::leading_mono() const {
    if (terms_.empty()) throw error(errc::internal, "leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw error(errc::internal, "leading term of zero polynomial");
    return terms_.rbegin()->second;
}

std::vector<ParamId> Poly::params_present() const {
    std::vector<ParamId> out;
    for (auto& [m, c] : terms_)
        for (auto& [p, e] : m.factors)
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

Poly Poly::div_exact(const Poly& d) const {
    if (d.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    Poly rem = *this, q;
    const Mono& dm = d.leading_mono();
    const Rat& dc = d.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& rm = rem.leading_mono();
        if (!rm.divisible_by(dm))
            throw error(errc::internal, "inexact polynomial division");
        Mono qm = rm / dm;
        Rat qc = rem.leading_coeff() / dc;
        q.insert(qm, qc);
        rem = rem - d * Poly::term(qc, qm);
    }
    return q;
}

Poly Poly::primitive(Rat& content) const {
    if (is_zero()) { content = Rat(0); return Poly(); }
    BigInt l(1), g(0);
    for (auto& [m, c] : terms_) l = BigInt::lcm(l, c.den());
    for (auto& [m, c] : terms_) g = BigInt::gcd(g, c.num() * l);
    Rat scale(l, g);                       // multiply by this to get primitive
    if (leading_coeff().sign() < 0) scale = -scale;
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c * scale);
    content = Rat(1) / scale;
    return r;
}

namespace {

// Pseudo-remainder of a by b viewed as univariate polynomials in p with Poly
// coefficients. Requires deg_p(b) >= 1.
Poly pseudo_rem(const Poly& a, const Poly& b, ParamId p) {
    uint32_t db = b.degree_in(p);
    Poly lb = b.coeff_of(p, db);
    Poly r = a;
    while (!r.is_zero() && r.degree_in(p) >= db) {
        uint32_t dr = r.degree_in(p);
        Poly lr = r.coeff_of(p, dr);
        Poly shift = (dr > db) ? Poly::var(p, dr - db) : Poly(1);
        r = r * lb - b * lr * shift;
        if (!r.is_zero() && r.degree_in(p) >= dr && dr > 0)
            throw error(errc::internal, "pseudo-division failed to reduce degree");
        if (dr == db) break;
    }
    return r;
}

Poly poly_content_in(const Poly& a, ParamId p) {
    // gcd of the univariate-in-p coefficients
    Poly g;
    for (uint32_t k = 0; k <= a.degree_in(p); ++k) {
        Poly c = a.coeff_of(p, k);
        if (!c.is_zero()) g = Poly::gcd(g, c);
    }
    return g;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Rat content;
    if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive(content);
    if (b.is_zero()) return a.primitive(content);
    Poly pa = a.primitive(content), pb = b.primitive(content);
    if (pa.is_constant() || pb.is_constant()) return Poly(1);

    auto va = pa.params_present();
    auto vb = pb.params_present();
    ParamId p = 0;
    bool found = false;
    for (ParamId q : va)
        if (std::find(vb.begin(), vb.end(), q) != vb.end()) { p = q; found = true; break; }
    if (!found) return Poly(1);   // no shared variable: coprime up to content

    Poly ca = poly_content_in(pa, p), cb = poly_content_in(pb, p);
    Poly cg = Poly::gcd(ca, cb);
    Poly u = pa.div_exact(ca), v = pb.div_exact(cb);
    if (u.degree_in(p) < v.degree_in(p)) std::swap(u, v);
    while (!v.is_zero() && v.degree_in(p) > 0) {
        Poly r = pseudo_rem(u, v, p);
        u = v;
        if (r.is_zero()) { v = Poly(); break; }
        Poly rc = poly_content_in(r, p);
        v = r.div_exact(rc);
    }
    Poly g = (!v.is_zero()) ? Poly(1) : u;   // nonzero deg-0 remainder => coprime in p
    g = (g * cg).primitive(content);
    return g;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading (largest) terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        std::string cs = c.to_string();
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) cs = (-c).to_string();
        }
        first = false;
        bool coeff_is_one = (cs == "1") && !it->first.empty();
        if (!coeff_is_one) os << cs;
        bool need_star = !coeff_is_one;
        for (auto& [p, e] : it->first.factors) {
            if (need_star) os << "*";
            os << Params::name(p);
            if (e != 1) os << "^" << e;
            need_star = true;
        }
        if (it->first.empty() && coeff_is_one) os << cs;
    }
    return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long long n, long long d) {
    *this = canonicalize(Poly(Rat(n)), Poly(Rat(d)));
}

Scalar::Scalar(const Rat& r) {
    *this = canonicalize(Poly(r), Poly(1));
}

Scalar Scalar::param(ParamId p) {
    return Scalar(Poly::var(p), Poly(1), canonical_tag{});
}

Scalar Scalar::canonicalize(const Poly& raw_num, const Poly& raw_den) {
    if (raw_den.is_zero()) throw error(errc::zero_denominator, "scalar with zero denominator");
    if (raw_num.is_zero()) return Scalar();
    Poly n = raw_num, d = raw_den;
    Poly g = Poly::gcd(n, d);
    if (!g.is_constant()) { n = n.div_exact(g); d = d.div_exact(g); }
    // joint integer-content normalization
    BigInt l(1), gg(0);
    for (auto& [m, c] : n.terms()) l = BigInt::lcm(l, c.den());
    for (auto& [m, c] : d.terms()) l = BigInt::lcm(l, c.den());
    for (auto& [m, c] : n.terms()) gg = BigInt::gcd(gg, c.num() * l);
    for (auto& [m, c] : d.terms()) gg = BigInt::gcd(gg, c.num() * l);
    Rat scale(l, gg);
    if (d.leading_coeff().sign() < 0) scale = -scale;
    Poly n2, d2;
    for (auto& [m, c] : n.terms()) n2.insert(m, c * scale);
    for (auto& [m, c] : d.terms()) d2.insert(m, c * scale);
    return Scalar(std::move(n2), std::move(d2), canonical_tag{});
}

bool Scalar::is_one() const {
    return num_.is_constant() && den_.is_constant() && !num_.is_zero()
        && num_.constant_value() == den_.constant_value();
}

Rat Scalar::constant_value() const {
    if (!is_constant()) throw error(errc::internal, "scalar is not constant");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return canonicalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return canonicalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    return canonicalize(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw error(errc::division_by_zero, "scalar division by zero");
    if (is_zero()) return Scalar();
    return canonicalize(num_ * o.den_, den_ * o.num_);
}

bool Scalar::operator<(const Scalar& o) const {
    // Any deterministic total order works; compare rendered forms last-resort
    // is wasteful, so walk the term maps.
    auto cmp_poly = [](const Poly& a, const Poly& b) -> int {
        auto ia = a.terms().begin(), ib = b.terms().begin();
        MonoLess less;
        for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
            if (less(ia->first, ib->first)) return -1;
            if (less(ib->first, ia->first)) return 1;
            if (ia->second != ib->second) {
                Rat d = ia->second - ib->second;
                return d.sign();
            }
        }
        if (ia != a.terms().end()) return 1;
        if (ib != b.terms().end()) return -1;
        return 0;
    };
    int c = cmp_poly(num_, o.num_);
    if (c != 0) return c < 0;
    return cmp_poly(den_, o.den_) < 0;
}

namespace {

Scalar poly_substitute(const Poly& p, const std::map<ParamId, Scalar>& bindings) {
    Scalar acc;
    for (auto& [m, c] : p.terms()) {
        Scalar t(c);
        for (auto& [q, e] : m.factors) {
            auto it = bindings.find(q);
            Scalar base = (it != bindings.end()) ? it->second : Scalar::param(q);
            for (uint32_t k = 0; k < e; ++k) t *= base;
        }
        acc += t;
    }
    return acc;
}

} // namespace

Scalar Scalar::substitute(const std::map<ParamId, Scalar>& bindings) const {
    Scalar n = poly_substitute(num_, bindings);
    Scalar d = poly_substitute(den_, bindings);
    return n / d;
}

std::optional<Scalar> Scalar::limit_at_infinity(ParamId p) const {
    uint32_t dn = num_.degree_in(p), dd = den_.degree_in(p);
    if (is_zero()) return Scalar();
    if (dn < dd) return Scalar();
    if (dn > dd) return std::nullopt;
    if (dn == 0) return *this;   // p-free
    return canonicalize(num_.coeff_of(p, dn), den_.coeff_of(p, dd));
}

std::vector<ParamId> Scalar::params_present() const {
    auto a = num_.params_present();
    auto b = den_.params_present();
    for (ParamId p : b)
        if (std::find(a.begin(), a.end(), p) == a.end()) a.push_back(p);
    std::sort(a.begin(), a.end());
    return a;
}

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::string ns = num_.to_string();
    if (den_.is_constant() && den_.constant_value().is_one()) return ns;
    std::string ds = den_.to_string();
    bool np = num_.term_count() > 1;
    bool dp = den_.term_count() > 1 || !den_.leading_mono().empty();
    std::string r = np ? "(" + ns + ")" : ns;
    r += "/";
    r += dp ? "(" + ds + ")" : ds;
    return r;
}

} // namespace kappa

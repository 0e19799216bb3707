#include "kappa/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace kappa {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    while (m) {
        limbs_.push_back((uint32_t)(m & 0xffffffffULL));
        m >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg && !r.is_zero()) r.sign_ = -r.sign_;
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back((uint32_t)(s & 0xffffffffULL));
        carry = s >> 32;
    }
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t d = (int64_t)r[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
        if (d < 0) { d += ((int64_t)1 << 32); borrow = 1; } else borrow = 0;
        r[i] = (uint32_t)d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = (uint64_t)a[i] * b[j] + r[i + j] + carry;
            r[i + j] = (uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = (uint64_t)r[k] + carry;
            r[k] = (uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Binary long division on magnitudes. Slow in theory, entirely adequate for
// the coefficient sizes this project produces.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    for (size_t bit = a.size() * 32; bit-- > 0;) {
        // r <<= 1
        uint32_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint32_t nc = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = nc;
        }
        if (carry) r.push_back(1);
        // r |= bit(a)
        if ((a[bit / 32] >> (bit % 32)) & 1u) {
            if (r.empty()) r.push_back(0);
            r[0] |= 1u;
        }
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= (1u << (bit % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) { r.limbs_ = sub_mag(limbs_, o.limbs_); r.sign_ = sign_; }
        else       { r.limbs_ = sub_mag(o.limbs_, limbs_); r.sign_ = o.sign_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (a.is_zero()) { q = BigInt(); r = BigInt(); return; }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    q.trim();
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(limbs_, o.limbs_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a * b).abs() / gcd(a, b);
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt v = abs();
    const BigInt chunk(1000000000);
    std::vector<uint32_t> parts;
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, chunk, q, r);
        parts.push_back(r.limbs_.empty() ? 0 : r.limbs_[0]);
        v = q;
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(parts.back());
    for (size_t i = parts.size() - 1; i-- > 0;) {
        std::string p = std::to_string(parts[i]);
        s += std::string(9 - p.size(), '0') + p;
    }
    return s;
}

bool BigInt::fits_ll() const { return limbs_.size() <= 2 && !(limbs_.size() == 2 && (limbs_[1] >> 31)); }

long long BigInt::to_ll() const {
    unsigned long long m = 0;
    for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    return sign_ < 0 ? -(long long)m : (long long)m;
}

} // namespace kappa

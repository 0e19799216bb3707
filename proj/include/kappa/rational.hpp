#pragma once

#include "kappa/bigint.hpp"

namespace kappa {

// Exact rational number, always reduced, denominator > 0.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }
    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const { return Rat(num_ * o.den_, den_ * o.num_); }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    struct raw_tag {};
    Rat(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize();

    BigInt num_, den_;
};

inline void Rat::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
}

} // namespace kappa

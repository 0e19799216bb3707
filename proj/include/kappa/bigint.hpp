#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kappa {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// All residual checks in this project reduce to exact integer arithmetic,
// so there is no floating point anywhere downstream of this class.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division (quotient rounds toward zero), remainder has the
    // sign of the dividend. Divisor must be nonzero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);   // nonnegative
    static BigInt lcm(const BigInt& a, const BigInt& b);

    BigInt abs() const;
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

    std::string to_string() const;

    // Fits in long long? (used only for diagnostics)
    bool fits_ll() const;
    long long to_ll() const;

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<uint32_t> limbs_;     // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace kappa

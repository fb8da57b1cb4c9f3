#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fcd {

// Signed arbitrary-precision integer: sign + little-endian base-2^32 magnitude.
// Just enough for exact polynomial arithmetic: add, subtract, multiply,
// small powers, comparison, decimal conversion.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt pow2(unsigned k);
    static BigInt pow(const BigInt& base, unsigned exp);

    bool is_zero() const { return mag_.empty(); }
    bool negative() const { return neg_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o);

    bool operator==(const BigInt& o) const = default;
    // total order
    bool operator<(const BigInt& o) const;

    BigInt abs() const;

    std::string str() const;
    bool fits_int64() const;
    long long to_int64() const; // pre: fits_int64()

private:
    bool neg_ = false;              // false for zero
    std::vector<uint32_t> mag_;     // empty means zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b); // a >= b
};

} // namespace fcd

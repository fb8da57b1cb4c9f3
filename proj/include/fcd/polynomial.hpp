#pragma once

#include "fcd/bigint.hpp"

#include <map>
#include <string>

namespace fcd {

// Integer polynomial in z with arbitrary-precision coefficients and
// non-negative machine-integer exponents. Zero coefficients are never stored,
// so the zero polynomial is the empty term map.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial monomial(int exp, BigInt coeff = BigInt(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int exp) const;

    Polynomial add(const Polynomial& o) const;
    Polynomial scale(const BigInt& k) const;
    BigInt eval(const BigInt& x) const;

    bool operator==(const Polynomial& o) const = default;

    // "2 + 2*z^2", "2*z", "0"; terms ascending by exponent, zero terms omitted.
    std::string str() const;

private:
    std::map<int, BigInt> terms_;
};

} // namespace fcd

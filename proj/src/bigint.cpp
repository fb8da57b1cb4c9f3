#include "fcd/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fcd {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    neg_ = v < 0;
    // avoid overflow on LLONG_MIN
    unsigned long long u = neg_ ? ~static_cast<unsigned long long>(v) + 1ull
                                : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<uint32_t>(u & 0xFFFFFFFFull));
        u >>= 32;
    }
}

BigInt BigInt::pow2(unsigned k) {
    BigInt r;
    r.mag_.assign(k / 32 + 1, 0);
    r.mag_.back() = 1u << (k % 32);
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xFFFFFFFFull));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    assert(cmp_mag(a, b) >= 0);
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += 1ll << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<uint32_t>(d));
    }
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.neg_ = neg_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.neg_ = neg_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.neg_ = o.neg_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt& BigInt::operator+=(const BigInt& o) {
    *this = *this + o;
    return *this;
}

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.neg_ = neg_ != o.neg_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] + static_cast<uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<uint32_t>(cur & 0xFFFFFFFFull);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur & 0xFFFFFFFFull);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1u) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmp_mag(mag_, o.mag_);
    return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide magnitude by 1e9, collect remainder
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (neg_) return u <= 0x8000000000000000ull;
    return u <= 0x7FFFFFFFFFFFFFFFull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return neg_ ? -static_cast<long long>(u - 1) - 1 : static_cast<long long>(u);
}

} // namespace fcd

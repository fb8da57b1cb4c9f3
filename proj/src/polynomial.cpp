#include "fcd/polynomial.hpp"

namespace fcd {

Polynomial Polynomial::monomial(int exp, BigInt coeff) {
    Polynomial p;
    if (!coeff.is_zero()) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

BigInt Polynomial::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt() : it->second;
}

Polynomial Polynomial::add(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

Polynomial Polynomial::scale(const BigInt& k) const {
    Polynomial r;
    if (k.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

BigInt Polynomial::eval(const BigInt& x) const {
    BigInt r;
    for (const auto& [e, c] : terms_) r += c * BigInt::pow(x, static_cast<unsigned>(e));
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c.negative()) s += "-";
        } else {
            s += c.negative() ? " - " : " + ";
        }
        s += c.abs().str();
        if (e == 1) s += "*z";
        else if (e > 1) s += "*z^" + std::to_string(e);
        first = false;
    }
    return s;
}

} // namespace fcd

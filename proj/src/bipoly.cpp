#include "zdqft/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace zdqft {

BiPoly::BiPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Key{0, 0}, constant);
}

BiPoly BiPoly::monomial(const Rational& coef, unsigned eps_deg, unsigned g_deg) {
    BiPoly p;
    if (!coef.is_zero()) p.terms_.emplace(Key{eps_deg, g_deg}, coef);
    return p;
}

Rational BiPoly::coeff(unsigned eps_deg, unsigned g_deg) const {
    auto it = terms_.find({eps_deg, g_deg});
    return it == terms_.end() ? Rational() : it->second;
}

unsigned BiPoly::min_eps_degree() const {
    if (is_zero()) throw std::domain_error("BiPoly: zero polynomial has no degree");
    unsigned best = terms_.begin()->first.first;
    for (const auto& [k, c] : terms_) best = std::min(best, k.first);
    return best;
}

unsigned BiPoly::min_g_degree() const {
    if (is_zero()) throw std::domain_error("BiPoly: zero polynomial has no degree");
    unsigned best = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) best = std::min(best, k.second);
    return best;
}

unsigned BiPoly::max_eps_degree() const {
    if (is_zero()) throw std::domain_error("BiPoly: zero polynomial has no degree");
    unsigned best = 0;
    for (const auto& [k, c] : terms_) best = std::max(best, k.first);
    return best;
}

unsigned BiPoly::max_g_degree() const {
    if (is_zero()) throw std::domain_error("BiPoly: zero polynomial has no degree");
    unsigned best = 0;
    for (const auto& [k, c] : terms_) best = std::max(best, k.second);
    return best;
}

BiPoly BiPoly::truncated(unsigned eps_max, unsigned g_max) const {
    BiPoly out;
    for (const auto& [k, c] : terms_)
        if (k.first <= eps_max && k.second <= g_max) out.terms_.emplace(k, c);
    return out;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || c != Rational(1)) {
            os << c.str();
            if (has_var) os << ' ';
        }
        if (k.first == 1)
            os << "eps";
        else if (k.first > 1)
            os << "eps^" << k.first;
        if (k.first > 0 && k.second > 0) os << ' ';
        if (k.second == 1)
            os << "g";
        else if (k.second > 1)
            os << "g^" << k.second;
    }
    return os.str();
}

}  // namespace zdqft

#ifndef ZDQFT_BIPOLY_HPP
#define ZDQFT_BIPOLY_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "zdqft/rational.hpp"

namespace zdqft {

/// Polynomial in the two bookkeeping variables eps (line grading) and g
/// (vertex grading) with exact rational coefficients. Zero coefficients are
/// never stored, so equality is plain term-map equality.
class BiPoly {
  public:
    /// Exponent pair (eps degree, g degree).
    using Key = std::pair<unsigned, unsigned>;
    using TermMap = std::map<Key, Rational>;

    BiPoly() = default;
    BiPoly(const Rational& constant);  // implicit: scalars embed as constants
    BiPoly(long constant) : BiPoly(Rational(constant)) {}

    static BiPoly monomial(const Rational& coef, unsigned eps_deg, unsigned g_deg);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(unsigned eps_deg, unsigned g_deg) const;

    // Degree bounds over all stored monomials; callers must not ask a zero
    // polynomial for its degrees.
    unsigned min_eps_degree() const;
    unsigned min_g_degree() const;
    unsigned max_eps_degree() const;
    unsigned max_g_degree() const;

    /// Drops every monomial with eps degree > eps_max or g degree > g_max.
    BiPoly truncated(unsigned eps_max, unsigned g_max) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& s) { a *= s; return a; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { a *= s; return a; }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Human-readable form, e.g. "1/2 eps^2 g + 3".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

  private:
    void add_term(const Key& k, const Rational& c);

    TermMap terms_;
};

}  // namespace zdqft

#endif

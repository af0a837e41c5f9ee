#ifndef ZDQFT_SERIES_HPP
#define ZDQFT_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "zdqft/rational.hpp"

namespace zdqft {

/// Truncated formal power series in one variable with coefficients in a ring
/// R (Rational or BiPoly). The truncation order is fixed at construction and
/// every binary operation requires equal orders; mixing orders is an error,
/// never an implicit re-truncation.
///
/// R must be default-constructible to its zero, constructible from Rational,
/// and support +, -, *, * Rational and ==.
template <typename R>
class TruncSeries {
  public:
    explicit TruncSeries(unsigned order) : coeffs_(order + 1) {}

    static TruncSeries constant(unsigned order, R value) {
        TruncSeries s(order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    static TruncSeries one(unsigned order) { return constant(order, R(Rational(1))); }

    static TruncSeries monomial(unsigned order, unsigned degree, R coef) {
        TruncSeries s(order);
        if (degree <= order) s.coeffs_[degree] = std::move(coef);
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const R& coeff(unsigned n) const {
        if (n >= coeffs_.size()) throw std::out_of_range("TruncSeries: coefficient index past order");
        return coeffs_[n];
    }

    void set_coeff(unsigned n, R value) {
        if (n >= coeffs_.size()) throw std::out_of_range("TruncSeries: coefficient index past order");
        coeffs_[n] = std::move(value);
    }

    const std::vector<R>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  private:
    std::vector<R> coeffs_;  // c_0 .. c_order
};

namespace detail {
template <typename R>
void require_same_order(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncSeries: mixed truncation orders");
}
}  // namespace detail

template <typename R>
TruncSeries<R> operator+(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    detail::require_same_order(a, b);
    TruncSeries<R> out(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

template <typename R>
TruncSeries<R> operator-(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    detail::require_same_order(a, b);
    TruncSeries<R> out(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) out.set_coeff(n, a.coeff(n) - b.coeff(n));
    return out;
}

/// Cauchy product truncated at the common order.
template <typename R>
TruncSeries<R> operator*(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    detail::require_same_order(a, b);
    TruncSeries<R> out(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) {
        R acc{};
        for (unsigned i = 0; i <= n; ++i) acc = acc + a.coeff(i) * b.coeff(n - i);
        out.set_coeff(n, acc);
    }
    return out;
}

/// Formal exponential. Requires zero constant term. Uses the recurrence
/// n e_n = sum_{k=1..n} k a_k e_{n-k}; the division by n happens at the
/// rational-scalar level, so coefficients stay exact.
template <typename R>
TruncSeries<R> exp(const TruncSeries<R>& a) {
    if (!(a.coeff(0) == R{}))
        throw std::domain_error("TruncSeries::exp: nonzero constant term");
    TruncSeries<R> e(a.order());
    e.set_coeff(0, R(Rational(1)));
    for (unsigned n = 1; n <= a.order(); ++n) {
        R acc{};
        for (unsigned k = 1; k <= n; ++k)
            acc = acc + a.coeff(k) * Rational(static_cast<long>(k)) * e.coeff(n - k);
        e.set_coeff(n, acc * Rational(1L, static_cast<long>(n)));
    }
    return e;
}

/// Formal logarithm, the inverse of exp. Requires constant term equal to one.
template <typename R>
TruncSeries<R> log(const TruncSeries<R>& a) {
    if (!(a.coeff(0) == R(Rational(1))))
        throw std::domain_error("TruncSeries::log: constant term must be 1");
    TruncSeries<R> l(a.order());
    for (unsigned n = 1; n <= a.order(); ++n) {
        R acc = a.coeff(n) * Rational(static_cast<long>(n));
        for (unsigned k = 1; k < n; ++k)
            acc = acc - l.coeff(k) * Rational(static_cast<long>(k)) * a.coeff(n - k);
        l.set_coeff(n, acc * Rational(1L, static_cast<long>(n)));
    }
    return l;
}

/// Formal substitution outer(inner), truncated at the common order.
/// Requires inner constant term zero.
template <typename R>
TruncSeries<R> compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner) {
    detail::require_same_order(outer, inner);
    if (!(inner.coeff(0) == R{}))
        throw std::domain_error("TruncSeries::compose: inner constant term must be 0");
    const unsigned N = outer.order();
    TruncSeries<R> out = TruncSeries<R>::constant(N, outer.coeff(N));
    for (unsigned k = N; k-- > 0;)
        out = out * inner + TruncSeries<R>::constant(N, outer.coeff(k));
    return out;
}

/// n! c_n, the labelled-counting normalization of the n-th coefficient.
template <typename R>
R egf_coeff(const TruncSeries<R>& a, unsigned n) {
    if (n > a.order()) throw std::out_of_range("egf_coeff: index past truncation order");
    return a.coeff(n) * Rational(factorial(n));
}

}  // namespace zdqft

#endif

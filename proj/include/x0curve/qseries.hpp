#ifndef X0CURVE_QSERIES_HPP
#define X0CURVE_QSERIES_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include <gmpxx.h>

#include "x0curve/errors.hpp"

namespace x0 {

using Integer = mpz_class;
using Rational = mpq_class;

// Truncated Laurent series in q with exponents on the lattice (1/denom)Z.
//
// A stored term (s, c) stands for c * q^(s/denom). Coefficients are known
// for every scaled exponent s < trunc; nothing is known at or above it.
// trunc == kExact marks a series that is exact (a finite Laurent polynomial).
// Terms are kept sorted, nonzero and strictly below trunc.
class QExp {
public:
    using Exponent = std::int64_t;

    struct Term {
        Exponent s;
        Rational c;

        friend bool operator==(const Term&, const Term&) = default;
    };

    static constexpr Exponent kExact = std::numeric_limits<Exponent>::max();

    // Exact zero.
    QExp() = default;

    // Canonicalizes the given terms: sorts, merges duplicates, drops zeros
    // and anything at or above trunc.
    QExp(std::int64_t denom, Exponent trunc, std::vector<Term> terms);

    static QExp zero(std::int64_t denom = 1, Exponent trunc = kExact);
    static QExp constant(const Rational& c, Exponent trunc = kExact);
    static QExp monomial(const Rational& c, Exponent s, std::int64_t denom = 1,
                         Exponent trunc = kExact);

    std::int64_t denom() const { return denom_; }
    Exponent trunc() const { return trunc_; }
    bool exact() const { return trunc_ == kExact; }
    const std::vector<Term>& terms() const { return terms_; }

    // True when no nonzero coefficient is known (the series may still be
    // nonzero beyond the window).
    bool empty() const { return terms_.empty(); }

    // Least scaled exponent carrying a nonzero coefficient; trunc if none.
    Exponent order() const { return terms_.empty() ? trunc_ : terms_.front().s; }

    // trunc / denom. Throws PrecisionError on exact series.
    Rational truncation_exponent() const;

    Rational coeff(const Rational& exponent) const;
    Rational coeff_scaled(Exponent s) const;

    Rational leading_exponent() const;
    Rational leading_coefficient() const;

    bool is_zero_through(const Rational& bound) const;

    // Same series written over the finer lattice (1/d)Z; d must be a
    // multiple of denom().
    QExp with_denom(std::int64_t d) const;
    // Same series over the coarsest lattice that holds it.
    QExp normalized() const;
    // Forgets everything at or above scaled exponent t.
    QExp truncated(Exponent t) const;

    QExp operator-() const;
    QExp scaled(const Rational& c) const;

    friend QExp operator+(const QExp& f, const QExp& g);
    friend QExp operator-(const QExp& f, const QExp& g);
    friend QExp operator*(const QExp& f, const QExp& g);

    // Equal as represented series: same coefficients and same window once
    // both are written over a common lattice.
    friend bool operator==(const QExp& f, const QExp& g);

private:
    struct Trusted {};
    QExp(Trusted, std::int64_t denom, Exponent trunc, std::vector<Term> terms)
        : denom_(denom), trunc_(trunc), terms_(std::move(terms))
    {
    }

    friend QExp mul(const QExp&, const QExp&);
    friend QExp add(const QExp&, const QExp&);
    friend QExp invert(const QExp&);
    friend QExp rescale_q(const QExp&, std::int64_t);
    friend QExp root_q(const QExp&, std::int64_t);

    std::int64_t denom_ = 1;
    Exponent trunc_ = kExact;
    std::vector<Term> terms_;
};

QExp add(const QExp& f, const QExp& g);

// Cauchy product. The result is certified below
// min(ord f + trunc g, ord g + trunc f).
QExp mul(const QExp& f, const QExp& g);

// Throws NotInvertible if f has no known nonzero term and PrecisionError if
// f is an exact non-monomial (its inverse is an infinite series).
QExp invert(const QExp& f);

QExp pow(const QExp& f, long k);

// tau -> m*tau, i.e. q -> q^m.
QExp rescale_q(const QExp& f, std::int64_t m);
// tau -> tau/m, i.e. q -> q^(1/m); realized by refining the lattice.
QExp root_q(const QExp& f, std::int64_t m);

inline Rational leading_exponent(const QExp& f) { return f.leading_exponent(); }
inline bool is_zero_through(const QExp& f, const Rational& bound)
{
    return f.is_zero_through(bound);
}

// True iff f and g agree on every exponent below both windows.
bool agree_on_common_window(const QExp& f, const QExp& g);

// Saturating helpers for scaled exponents (kExact absorbs).
QExp::Exponent exponent_add(QExp::Exponent a, QExp::Exponent b);

} // namespace x0

#endif

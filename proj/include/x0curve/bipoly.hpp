#ifndef X0CURVE_BIPOLY_HPP
#define X0CURVE_BIPOLY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "x0curve/errors.hpp"

namespace x0 {

using Integer = mpz_class;

// Sparse polynomial in Z[x, y]; keys are (x-degree, y-degree).
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, Integer>;

    struct Term {
        int i;
        int j;
        Integer c;
    };

    BiPoly() = default;

    static BiPoly constant(const Integer& c);
    static BiPoly monomial(const Integer& c, int i, int j);
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }

    // Adds c*x^i*y^j, keeping the map free of zeros.
    void add_term(int i, int j, const Integer& c);

    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(int i, int j) const;

    // -1 for the zero polynomial.
    int deg_x() const;
    int deg_y() const;
    int total_degree() const;

    // The coefficient of y^{deg_y} is the constant polynomial 1.
    bool monic_in_y() const;

    // P(-x, y).
    BiPoly negate_x() const;

    // Terms in graded lexicographic order, y before x, highest first.
    std::vector<Term> grlex_terms() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Integer& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    Map terms_;
};

BiPoly pow(const BiPoly& p, unsigned k);

// Division with remainder in y over Z[x], for a divisor monic in y.
// Returns (quotient, remainder) with deg_y(remainder) < deg_y(divisor).
std::pair<BiPoly, BiPoly> divide_monic_in_y(const BiPoly& num, const BiPoly& den);

// Laurent polynomial in sqrt(x) and y: keys are (2 * x-exponent, y-degree).
// Holds intermediate values of the substitution x -> sqrt(x) in the level
// recursion; only converted back once every x-exponent is whole.
class HalfExpPoly {
public:
    using Key = std::pair<std::int64_t, int>;
    using Map = std::map<Key, Integer>;

    HalfExpPoly() = default;
    static HalfExpPoly from(const BiPoly& p);
    static HalfExpPoly monomial(const Integer& c, std::int64_t i2, int j);

    void add_term(std::int64_t i2, int j, const Integer& c);
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Throws IntegralityError if any doubled exponent is odd or negative.
    BiPoly to_bipoly() const;

    HalfExpPoly& operator+=(const HalfExpPoly& o);
    HalfExpPoly& operator-=(const HalfExpPoly& o);
    friend HalfExpPoly operator+(HalfExpPoly a, const HalfExpPoly& b) { return a += b; }
    friend HalfExpPoly operator-(HalfExpPoly a, const HalfExpPoly& b) { return a -= b; }
    friend HalfExpPoly operator*(const HalfExpPoly& a, const HalfExpPoly& b);
    friend bool operator==(const HalfExpPoly&, const HalfExpPoly&) = default;

private:
    Map terms_;
};

} // namespace x0

#endif

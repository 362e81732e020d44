#ifndef X0CURVE_TESTS_SUPPORT_HPP
#define X0CURVE_TESTS_SUPPORT_HPP

// Independent oracles and fixtures shared by the unit and acceptance tests.
// Nothing here calls into the series builders it is used to check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "x0curve/bipoly.hpp"
#include "x0curve/qseries.hpp"

namespace x0::testing {

// prod_{n=1}^{factors} (1 - q^n), dense through q^{len-1}.
inline std::vector<Integer> euler_product(int factors, int len)
{
    std::vector<Integer> c(len, 0);
    c[0] = 1;
    for (int n = 1; n <= factors; ++n)
        for (int k = len - 1; k >= n; --k)
            c[k] -= c[k - n];
    return c;
}

// theta_which(tau) from the defining lattice sum, as exponent (in 1/8) ->
// coefficient, for exponents < 8*bound.
inline std::map<long, long> theta_lattice(int which, long bound)
{
    std::map<long, long> out;
    for (long m = -200; m <= 200; ++m) {
        long e8 = 0;
        long c = 1;
        if (which == 2) {
            e8 = (2 * m + 1) * (2 * m + 1);
        } else {
            e8 = 4 * m * m;
            if (which == 4 && m % 2 != 0)
                c = -1;
        }
        if (e8 < 8 * bound)
            out[e8] += c;
    }
    return out;
}

inline BiPoly X() { return BiPoly::x(); }
inline BiPoly Yp(int k) { return BiPoly::monomial(1, 0, k); }
inline BiPoly C(long c) { return BiPoly::constant(Integer(c)); }
inline BiPoly C(const Integer& c) { return BiPoly::constant(c); }

// y^8 - x(x+2)^4(x^2+4)
inline BiPoly golden_p7()
{
    return Yp(8) - X() * pow(X() + C(2), 4) * (pow(X(), 2) + C(4));
}

// y^16 - 16x(x+2)^4(x^2+4)y^8 - x(x+2)^4(x-2)^8(x^2+4)
inline BiPoly golden_p8()
{
    const BiPoly v = X() * pow(X() + C(2), 4) * (pow(X(), 2) + C(4));
    const BiPoly u = pow(X() - C(2), 8);
    return Yp(16) - C(16) * v * Yp(8) - u * v;
}

// The X_0(1024) equation with u = (x-2)^8, v = x(x+2)^4(x^2+4), constants
// kept in their factored form.
inline BiPoly golden_p10()
{
    const BiPoly u = pow(X() - C(2), 8);
    const BiPoly v = X() * pow(X() + C(2), 4) * (pow(X(), 2) + C(4));
    const BiPoly uv = u * v;
    const BiPoly u2 = u * u, v2 = v * v, u3 = u2 * u, v3 = v2 * v;
    const Integer two8 = Integer(1) << 8, two15 = Integer(1) << 15, two16 = Integer(1) << 16;
    const Integer two18 = Integer(1) << 18, two23 = Integer(1) << 23, two26 = Integer(1) << 26;

    BiPoly p = Yp(64);
    p -= C(4096) * v * Yp(56);
    p -= C(61696) * uv * Yp(48);
    p -= C(512) * uv * (C(253) * u + C(30464) * v) * Yp(40);
    p -= C(16) * uv * (C(4619) * u2 - C(two8 * 2053) * uv + C(two16 * 7 * 73) * v2) * Yp(32);
    p -= C(512) * uv * (C(31) * u3 + C(35712) * u2 * v + C(3 * two16) * u * v2 + C(two23) * v3) *
         Yp(24);
    p -= C(32) * u3 * v * (C(47) * u2 - C(320000) * uv + C(two15 * 17 * 31) * v2) * Yp(16);
    p -= C(64) * u3 * v * (u3 + C(5248) * u2 * v + C(two18 * 5) * u * v2 + C(two26) * v3) * Yp(8);
    p -= pow(u, 7) * v;
    return p;
}

// Random truncated series with small rational coefficients.
inline QExp random_series(std::mt19937_64& rng, std::int64_t denom, QExp::Exponent lo,
                          QExp::Exponent trunc, int max_terms)
{
    std::uniform_int_distribution<QExp::Exponent> pos(lo, trunc - 1);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> count(0, max_terms);
    std::vector<QExp::Term> terms;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        terms.push_back({pos(rng), c});
    }
    return QExp(denom, trunc, std::move(terms));
}

// Random polynomial in x, y with coefficients in [-range, range].
inline BiPoly random_bipoly(std::mt19937_64& rng, int max_deg, int max_terms, long range)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-range, range);
    std::uniform_int_distribution<int> count(0, max_terms);
    BiPoly p;
    const int k = count(rng);
    for (int t = 0; t < k; ++t)
        p.add_term(deg(rng), deg(rng), Integer(coef(rng)));
    return p;
}

} // namespace x0::testing

#endif

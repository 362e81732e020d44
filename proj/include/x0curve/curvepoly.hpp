#ifndef X0CURVE_CURVEPOLY_HPP
#define X0CURVE_CURVEPOLY_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "x0curve/bipoly.hpp"
#include "x0curve/qseries.hpp"

namespace x0 {

inline constexpr int kDefaultLevelCap = 16;

// Even and odd parts in x: P = even + odd, even(-x,y) = even(x,y),
// odd(-x,y) = -odd(x,y).
struct ParitySplit {
    BiPoly even;
    BiPoly odd;
};

ParitySplit parity_split(const BiPoly& p);

// One level of the recursion: P_{n-1} -> P_n for n >= 7.
//
// With Q, R the parity parts of P_{n-1}, write Q(X,Y) = q(X^2,Y) and
// R(X,Y) = X r(X^2,Y); the new polynomial is
//     (q(u,Y)^2 - u r(u,Y)^2) x^{2^{n-5}},  u = (x^2+4)/x,  Y = y/sqrt(x).
// Throws std::invalid_argument unless prev is monic in y of degree 2^{n-5},
// and IntegralityError if the result is not a polynomial.
BiPoly recursion_step(const BiPoly& prev, int n);

// Same map computed with sparse Laurent arithmetic in HalfExpPoly, no
// packing and no threads. Slow; kept as the oracle for recursion_step.
BiPoly recursion_step_reference(const BiPoly& prev, int n);

// y^4 - x^3 - 4x
BiPoly p6();

// P_n for 6 <= n <= cap. Throws ResourceError above the cap.
BiPoly p_poly(int n, int cap = kDefaultLevelCap);

// P_6, ..., P_n.
std::vector<BiPoly> p_chain(int n, int cap = kDefaultLevelCap);

// sum c_ij xs^i ys^j, Horner in the y-stride. Truncation follows the series
// arithmetic, so the result window is exactly what the inputs certify.
QExp evaluate_at_series(const BiPoly& p, const QExp& xs, const QExp& ys);

// Largest i*x_pole + j*y_pole over the monomials of p.
long worst_pole_order(const BiPoly& p, long x_pole, long y_pole);

struct StructureReport {
    int deg_x = -1;
    int deg_y = -1;
    bool monic_in_y = false;
    std::size_t terms = 0;
    std::size_t max_coeff_bits = 0;
    std::set<int> y_exponents;
    std::set<int> y_residues_mod4;
    std::set<int> y_residues_mod8;
    // Parities (0 even, 1 odd) of the x-exponents that occur.
    std::set<int> x_parities;
};

StructureReport structure_report(const BiPoly& p);

} // namespace x0

#endif

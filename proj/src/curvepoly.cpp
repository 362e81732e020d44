#include "x0curve/curvepoly.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "x0curve/kernels.hpp"

namespace x0 {

namespace {

void check_predecessor(const BiPoly& prev, int n)
{
    if (n < 7)
        throw std::invalid_argument("recursion_step: need n >= 7, got " + std::to_string(n));
    const int d = 1 << (n - 5);
    if (prev.deg_y() != d || !prev.monic_in_y())
        throw std::invalid_argument("recursion_step: predecessor must be monic of degree " +
                                    std::to_string(d) + " in y");
}

// Q(X,Y) = q(X^2, Y) and R(X,Y) = X r(X^2, Y), as maps (a, j) -> c.
struct HalfParts {
    std::map<std::pair<int, int>, Integer> q;
    std::map<std::pair<int, int>, Integer> r;
};

HalfParts half_parts(const BiPoly& prev)
{
    const ParitySplit split = parity_split(prev);
    HalfParts h;
    for (const auto& [k, c] : split.even.terms())
        h.q[{k.first / 2, k.second}] = c;
    for (const auto& [k, c] : split.odd.terms())
        h.r[{(k.first - 1) / 2, k.second}] = c;
    return h;
}

} // namespace

ParitySplit parity_split(const BiPoly& p)
{
    BiPoly twice_even = p + p.negate_x();
    BiPoly even;
    for (const auto& [k, c] : twice_even.terms()) {
        if (!mpz_divisible_2exp_p(c.get_mpz_t(), 1))
            throw IntegralityError("parity_split: P(x,y) + P(-x,y) has an odd coefficient");
        even.add_term(k.first, k.second, Integer(c / 2));
    }
    BiPoly odd = p - even;
    return {std::move(even), std::move(odd)};
}

BiPoly recursion_step(const BiPoly& prev, int n)
{
    check_predecessor(prev, n);
    const std::int64_t D = std::int64_t{1} << (n - 5);
    const HalfParts h = half_parts(prev);

    int y_stride = 0;
    for (const auto& [k, c] : prev.terms())
        y_stride = std::gcd(y_stride, k.second);
    if (y_stride == 0)
        y_stride = 1;

    int max_a = 0;
    int max_jj = 0;
    for (const auto* part : {&h.q, &h.r})
        for (const auto& [k, c] : *part) {
            max_a = std::max(max_a, k.first);
            max_jj = std::max(max_jj, k.second / y_stride);
        }

    // Pack (a, jj) -> a + width*jj; width leaves room for the squared u-degree
    // plus the extra factor u on the odd part, so products never wrap.
    const std::size_t width = 2 * static_cast<std::size_t>(max_a) + 2;
    const std::size_t in_len = width * (static_cast<std::size_t>(max_jj) + 1);
    const std::size_t out_len = width * (2 * static_cast<std::size_t>(max_jj) + 1);
    auto pack = [&](const auto& part) {
        kernels::Coeffs v(in_len);
        for (const auto& [k, c] : part)
            v[static_cast<std::size_t>(k.first) + width * (k.second / y_stride)] = c;
        return v;
    };
    const kernels::Coeffs vq = pack(h.q);
    const kernels::Coeffs vr = pack(h.r);
    const kernels::Coeffs q2 = kernels::convolve(vq, vq, out_len);
    const kernels::Coeffs r2 =
        h.r.empty() ? kernels::Coeffs(out_len) : kernels::convolve(vr, vr, out_len);

    // For each y-degree b: s_b(u) = sum_a S[a] u^a with S = q^2 - u r^2, then
    //   s_b((x^2+4)/x) = x^{-A} sum_a S[a] (x^2+4)^a x^{A-a},
    // evaluated by Horner in the homogenized form.
    const auto n_rows = static_cast<std::ptrdiff_t>(2 * max_jj + 1);
    std::vector<std::vector<std::pair<std::int64_t, Integer>>> rows(n_rows);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t jj = 0; jj < n_rows; ++jj) {
        const std::size_t base = width * static_cast<std::size_t>(jj);
        std::vector<Integer> s(width);
        int top = -1;
        for (std::size_t a = 0; a < width; ++a) {
            s[a] = q2[base + a];
            if (a >= 1)
                s[a] -= r2[base + a - 1];
            if (sgn(s[a]) != 0)
                top = static_cast<int>(a);
        }
        if (top < 0)
            continue;
        std::vector<Integer> horner(2 * static_cast<std::size_t>(top) + 1);
        horner[0] = s[top];
        std::size_t len = 1;
        for (int a = top - 1; a >= 0; --a) {
            // horner *= (x^2 + 4)
            for (std::size_t k = len + 2; k-- > 0;) {
                mpz_mul_2exp(horner[k].get_mpz_t(), horner[k].get_mpz_t(), 2);
                if (k >= 2)
                    horner[k] += horner[k - 2];
            }
            len += 2;
            horner[static_cast<std::size_t>(top - a)] += s[a];
        }
        const std::int64_t b = jj * y_stride;
        const std::int64_t shift = 2 * D - 2 * top - b;
        auto& row = rows[jj];
        for (std::size_t k = 0; k < len; ++k)
            if (sgn(horner[k]) != 0)
                row.emplace_back(2 * static_cast<std::int64_t>(k) + shift, std::move(horner[k]));
    }

    HalfExpPoly result;
    for (std::ptrdiff_t jj = 0; jj < n_rows; ++jj)
        for (const auto& [i2, c] : rows[jj])
            result.add_term(i2, static_cast<int>(jj * y_stride), c);
    return result.to_bipoly();
}

BiPoly recursion_step_reference(const BiPoly& prev, int n)
{
    check_predecessor(prev, n);
    const std::int64_t D = std::int64_t{1} << (n - 5);
    const HalfParts h = half_parts(prev);

    HalfExpPoly u;
    u.add_term(2, 0, 1);  // x
    u.add_term(-2, 0, 4); // 4/x
    std::vector<HalfExpPoly> u_pow{HalfExpPoly::monomial(1, 0, 0)};
    auto power_of_u = [&](int a) -> const HalfExpPoly& {
        while (static_cast<int>(u_pow.size()) <= a)
            u_pow.push_back(u_pow.back() * u);
        return u_pow[static_cast<std::size_t>(a)];
    };

    auto substitute = [&](const auto& part) {
        HalfExpPoly out;
        for (const auto& [k, c] : part) {
            // c u^a (y x^{-1/2})^j
            HalfExpPoly term = power_of_u(k.first) * HalfExpPoly::monomial(c, -k.second, k.second);
            out += term;
        }
        return out;
    };
    const HalfExpPoly qs = substitute(h.q);
    const HalfExpPoly rs = substitute(h.r);
    const HalfExpPoly s = qs * qs - u * rs * rs;
    return (s * HalfExpPoly::monomial(1, 2 * D, 0)).to_bipoly();
}

BiPoly p6()
{
    BiPoly p;
    p.add_term(0, 4, 1);
    p.add_term(3, 0, -1);
    p.add_term(1, 0, -4);
    return p;
}

std::vector<BiPoly> p_chain(int n, int cap)
{
    if (n < 6)
        throw std::invalid_argument("p_poly: need n >= 6, got " + std::to_string(n));
    if (n > cap)
        throw ResourceError("p_poly: level n=" + std::to_string(n) + " exceeds the cap " +
                            std::to_string(cap));
    std::vector<BiPoly> chain{p6()};
    for (int m = 7; m <= n; ++m)
        chain.push_back(recursion_step(chain.back(), m));
    return chain;
}

BiPoly p_poly(int n, int cap)
{
    return p_chain(n, cap).back();
}

long worst_pole_order(const BiPoly& p, long x_pole, long y_pole)
{
    long worst = 0;
    for (const auto& [k, c] : p.terms())
        worst = std::max(worst, k.first * x_pole + k.second * y_pole);
    return worst;
}

QExp evaluate_at_series(const BiPoly& p, const QExp& xs, const QExp& ys)
{
    if (p.is_zero())
        return QExp::zero();

    // Group by y-degree: p = sum_j c_j(x) y^j.
    std::map<int, std::vector<std::pair<int, Integer>>> by_y;
    int y_stride = 0;
    for (const auto& [k, c] : p.terms()) {
        by_y[k.second].emplace_back(k.first, c);
        y_stride = std::gcd(y_stride, k.second);
    }
    if (y_stride == 0)
        y_stride = 1;

    std::vector<QExp> x_pow{QExp::constant(1)};
    for (int i = 1; i <= p.deg_x(); ++i)
        x_pow.push_back(x_pow.back() * xs);

    std::vector<int> levels;
    for (const auto& [j, cs] : by_y)
        levels.push_back(j);
    std::vector<QExp> coeff_series(levels.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t l = 0; l < static_cast<std::ptrdiff_t>(levels.size()); ++l) {
        QExp acc = QExp::zero();
        for (const auto& [i, c] : by_y.at(levels[l]))
            acc = acc + x_pow[static_cast<std::size_t>(i)].scaled(Rational(c));
        coeff_series[l] = std::move(acc);
    }

    const QExp y_step = pow(ys, y_stride);
    std::size_t level = levels.size() - 1;
    QExp acc = coeff_series[level];
    for (int j = levels.back() - y_stride; j >= 0; j -= y_stride) {
        acc = acc * y_step;
        if (level > 0 && levels[level - 1] == j) {
            --level;
            acc = acc + coeff_series[level];
        }
    }
    return acc;
}

StructureReport structure_report(const BiPoly& p)
{
    StructureReport r;
    r.deg_x = p.deg_x();
    r.deg_y = p.deg_y();
    r.monic_in_y = p.monic_in_y();
    r.terms = p.size();
    for (const auto& [k, c] : p.terms()) {
        r.y_exponents.insert(k.second);
        r.y_residues_mod4.insert(k.second % 4);
        r.y_residues_mod8.insert(k.second % 8);
        r.x_parities.insert(k.first % 2);
        r.max_coeff_bits = std::max(r.max_coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    return r;
}

} // namespace x0

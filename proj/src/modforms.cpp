#include "x0curve/modforms.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace x0 {

namespace {

std::int64_t pow2(int k)
{
    if (k < 0 || k > 62)
        throw std::out_of_range("power of two out of range: 2^" + std::to_string(k));
    return std::int64_t{1} << k;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1)
        f.emplace_back(n, 1);
    return f;
}

} // namespace

EtaQuotient::EtaQuotient(int level_exp, const std::map<int, long>& exps)
    : level_exp_(level_exp)
{
    if (level_exp < 0)
        throw std::invalid_argument("EtaQuotient: negative level exponent");
    for (const auto& [k, e] : exps) {
        if (k < 0 || k > level_exp)
            throw std::invalid_argument("EtaQuotient: eta(2^" + std::to_string(k) +
                                        " tau) is not at level 2^" + std::to_string(level_exp));
        if (e != 0)
            exps_[k] = e;
    }
}

long EtaQuotient::exponent(int k) const
{
    auto it = exps_.find(k);
    return it == exps_.end() ? 0 : it->second;
}

EtaQuotient x_quotient(int n)
{
    if (n < 2)
        throw std::invalid_argument("x_n as an eta quotient needs n >= 2");
    std::map<int, long> e;
    e[n - 2] += -2;
    e[n - 1] += 6;
    e[n] += -4;
    return EtaQuotient(n, e);
}

EtaQuotient y_quotient(int n)
{
    if (n < 4)
        throw std::invalid_argument("y_n as an eta quotient needs n >= 4");
    std::map<int, long> e;
    e[4] += 2;
    e[n - 1] += 1;
    e[3] += -1;
    e[n] += -2;
    return EtaQuotient(n, e);
}

QExp eta_series(std::int64_t scale, std::int64_t trunc)
{
    if (scale < 1)
        throw std::invalid_argument("eta_series: scale must be positive");
    if (trunc <= 0)
        throw std::invalid_argument("eta_series: trunc must be positive");
    // Euler's pentagonal theorem: prod (1 - q^k) = sum_j (-1)^j q^{j(3j-1)/2}.
    const std::int64_t t = 24 * trunc;
    std::vector<QExp::Term> terms;
    for (std::int64_t j = 0;; ++j) {
        const std::int64_t plus = scale * (1 + 12 * j * (3 * j - 1));
        const std::int64_t minus = scale * (1 + 12 * j * (3 * j + 1));
        if (plus >= t)
            break;
        const long sign = (j % 2 == 0) ? 1 : -1;
        terms.push_back({plus, sign});
        if (j > 0 && minus < t)
            terms.push_back({minus, sign});
    }
    return QExp(24, t, std::move(terms));
}

QExp theta_series(int which, std::int64_t scale, std::int64_t trunc)
{
    if (scale < 1)
        throw std::invalid_argument("theta_series: scale must be positive");
    if (trunc <= 0)
        throw std::invalid_argument("theta_series: trunc must be positive");
    std::vector<QExp::Term> terms;
    switch (which) {
    case 2: {
        // sum over n in Z of q^{(2n+1)^2/8}; n and -n-1 give the same exponent.
        const std::int64_t t = 8 * trunc;
        for (std::int64_t j = 0; scale * (2 * j + 1) * (2 * j + 1) < t; ++j)
            terms.push_back({scale * (2 * j + 1) * (2 * j + 1), 2});
        return QExp(8, t, std::move(terms));
    }
    case 3:
    case 4: {
        const std::int64_t t = 2 * trunc;
        for (std::int64_t j = 0; scale * j * j < t; ++j) {
            long c = j == 0 ? 1 : 2;
            if (which == 4 && j % 2 == 1)
                c = -c;
            terms.push_back({scale * j * j, c});
        }
        return QExp(2, t, std::move(terms));
    }
    default:
        throw std::invalid_argument("theta_series: which must be 2, 3 or 4");
    }
}

QExp eta_quotient_series(const EtaQuotient& eq, std::int64_t trunc)
{
    if (trunc <= 0)
        throw std::invalid_argument("eta_quotient_series: trunc must be positive");
    if (eq.exps().empty())
        return QExp::constant(1, trunc);

    // Exponent bookkeeping in units of 1/24: eta(m tau)^e has order e*m.
    std::int64_t total_order = 0;
    for (const auto& [k, e] : eq.exps())
        total_order += e * pow2(k);
    const std::int64_t target = 24 * trunc;

    QExp product = QExp::constant(1);
    for (const auto& [k, e] : eq.exps()) {
        const std::int64_t m = pow2(k);
        const std::int64_t factor_target = target - (total_order - e * m);
        // A positive power f^e loses (e-1)*ord(f); a negative one (|e|+1)*ord(f).
        const std::int64_t need = e > 0 ? factor_target - (e - 1) * m
                                        : factor_target + (-e + 1) * m;
        const std::int64_t eta_trunc = std::max(ceil_div(need, 24), m / 24 + 1);
        product = product * pow(eta_series(m, eta_trunc), e);
    }
    return product.with_denom(std::lcm<std::int64_t>(product.denom(), 24))
        .truncated(target * (std::lcm<std::int64_t>(product.denom(), 24) / 24))
        .normalized();
}

std::optional<int> NewmanVerdict::first_failure() const
{
    for (int i = 0; i < 4; ++i)
        if (!holds[i])
            return i + 1;
    return std::nullopt;
}

std::string NewmanVerdict::describe() const
{
    static const char* names[4] = {"sum e_k = 0", "sum k*e_k = 0 mod 2",
                                   "sum e_k*2^k = 0 mod 24", "sum e_k*2^(n-k) = 0 mod 24"};
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        if (i)
            os << "; ";
        os << "(" << i + 1 << ") " << names[i] << ": " << (holds[i] ? "holds" : "fails")
           << " [" << sums[i].get_str() << "]";
    }
    return os.str();
}

NewmanVerdict newman_conditions(const EtaQuotient& eq)
{
    NewmanVerdict v;
    const int n = eq.level_exp();
    for (const auto& [k, e] : eq.exps()) {
        const Integer ee(e);
        Integer p2k, p2nk;
        mpz_ui_pow_ui(p2k.get_mpz_t(), 2, static_cast<unsigned long>(k));
        mpz_ui_pow_ui(p2nk.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
        v.sums[0] += ee;
        v.sums[1] += ee * k;
        v.sums[2] += ee * p2k;
        v.sums[3] += ee * p2nk;
    }
    v.holds[0] = sgn(v.sums[0]) == 0;
    v.holds[1] = mpz_divisible_ui_p(v.sums[1].get_mpz_t(), 2) != 0;
    v.holds[2] = mpz_divisible_ui_p(v.sums[2].get_mpz_t(), 24) != 0;
    v.holds[3] = mpz_divisible_ui_p(v.sums[3].get_mpz_t(), 24) != 0;
    return v;
}

std::int64_t cusp_width(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("cusp_width: need 0 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    return 2 * k >= n ? 1 : pow2(n - 2 * k);
}

std::string Cusp::label() const
{
    if (is_infinity())
        return "inf";
    return std::to_string(a) + "/" + std::to_string(pow2(k));
}

std::vector<Cusp> cusps_of(int n)
{
    if (n < 1)
        throw std::invalid_argument("cusps_of: need n >= 1");
    std::vector<Cusp> out;
    for (int k = 0; k <= n; ++k) {
        const int m = std::min(k, n - k);
        const std::int64_t modulus = pow2(m);
        const std::int64_t w = cusp_width(n, k);
        if (m == 0) {
            out.push_back({1, k, n, w});
            continue;
        }
        for (std::int64_t a = 1; a < modulus; a += 2)
            out.push_back({a, k, n, w});
    }
    return out;
}

Rational order_at_cusp(const EtaQuotient& eq, const Cusp& c)
{
    if (eq.level_exp() != c.n)
        throw std::invalid_argument("order_at_cusp: quotient level 2^" +
                                    std::to_string(eq.level_exp()) + " but cusp of level 2^" +
                                    std::to_string(c.n));
    // Ligozat: (N/24) sum_delta gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta),
    // with N = 2^n, d = 2^k, delta = 2^j; everything is a power of two.
    const int n = c.n;
    const int k = c.k;
    Rational sum;
    for (const auto& [j, e] : eq.exps()) {
        const int g = std::min(k, j);
        const int shift = 2 * g - std::min(k, n - k) - k - j;
        Rational term(e);
        if (shift >= 0)
            term *= Integer(1) << shift;
        else
            term /= Integer(1) << (-shift);
        sum += term;
    }
    Rational order = sum * (Integer(1) << n) / 24;
    order.canonicalize();
    return order;
}

Rational valence_sum(const EtaQuotient& eq)
{
    Rational total;
    for (const auto& c : cusps_of(eq.level_exp()))
        total += order_at_cusp(eq, c);
    return total;
}

std::int64_t gamma0_index(std::int64_t N)
{
    if (N < 1)
        throw std::invalid_argument("gamma0_index: need N >= 1");
    std::int64_t mu = N;
    for (const auto& [p, e] : factorize(N))
        mu = mu / p * (p + 1);
    return mu;
}

std::int64_t gamma0_cusp_count(std::int64_t N)
{
    if (N < 1)
        throw std::invalid_argument("gamma0_cusp_count: need N >= 1");
    // sum over d | N of phi(gcd(d, N/d)); multiplicative, so per prime power
    // p^e this is sum_{i=0}^{e} phi(p^{min(i, e-i)}).
    std::int64_t count = 1;
    for (const auto& [p, e] : factorize(N)) {
        std::int64_t local = 0;
        for (int i = 0; i <= e; ++i) {
            const int m = std::min(i, e - i);
            std::int64_t pm = 1;
            for (int t = 0; t < m; ++t)
                pm *= p;
            local += m == 0 ? 1 : pm / p * (p - 1);
        }
        count *= local;
    }
    return count;
}

std::int64_t genus_X0(std::int64_t N)
{
    if (N < 1)
        throw std::invalid_argument("genus_X0: need N >= 1");
    const auto factors = factorize(N);
    const std::int64_t mu = gamma0_index(N);

    // Elliptic points of order 2 and 3.
    std::int64_t nu2 = 0;
    if (N % 4 != 0) {
        nu2 = 1;
        for (const auto& [p, e] : factors)
            nu2 *= (p == 2) ? 1 : (p % 4 == 1 ? 2 : 0);
    }
    std::int64_t nu3 = 0;
    if (N % 9 != 0) {
        nu3 = 1;
        for (const auto& [p, e] : factors)
            nu3 *= (p == 3) ? 1 : (p % 3 == 1 ? 2 : 0);
    }
    const std::int64_t cusps = gamma0_cusp_count(N);
    const std::int64_t twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps;
    if (twelve_g % 12 != 0)
        throw IntegralityError("genus_X0: non-integral genus for N=" + std::to_string(N));
    return twelve_g / 12;
}

std::int64_t genus_fermat(std::int64_t d)
{
    if (d < 1)
        throw std::invalid_argument("genus_fermat: need d >= 1");
    return (d - 1) * (d - 2) / 2;
}

QExp x_series(int n, std::int64_t trunc)
{
    if (n < 1)
        throw std::invalid_argument("x_series: need n >= 1");
    const std::int64_t D = pow2(n - 1);
    // theta_2(D tau) starts at q^{D/8}; the quotient has order -D/8.
    if (8 * trunc <= -D)
        throw PrecisionError("x_series: trunc does not reach the leading term");
    const std::int64_t t3 = trunc + ceil_div(D, 8);
    const std::int64_t t2 = std::max(trunc + ceil_div(D, 4), D / 8 + 1);
    const QExp x = (theta_series(3, D, t3) * invert(theta_series(2, D, t2))).scaled(2);
    return x.truncated(trunc * x.denom()).normalized();
}

QExp y_series(int n, std::int64_t trunc)
{
    if (n < 1)
        throw std::invalid_argument("y_series: need n >= 1");
    const std::int64_t D = pow2(n - 1);
    if (8 * trunc <= 8 - D)
        throw PrecisionError("y_series: trunc does not reach the leading term");
    const std::int64_t t8 = std::max<std::int64_t>(trunc + ceil_div(D, 8), 2);
    const std::int64_t t2 = std::max(trunc - 1 + ceil_div(D, 4), D / 8 + 1);
    const QExp y = theta_series(2, 8, t8) * invert(theta_series(2, D, t2));
    return y.truncated(trunc * y.denom()).normalized();
}

} // namespace x0

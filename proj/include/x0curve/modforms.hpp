#ifndef X0CURVE_MODFORMS_HPP
#define X0CURVE_MODFORMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "x0curve/qseries.hpp"

namespace x0 {

// prod_{k=0}^{n} eta(2^k tau)^{e_k}, living at level 2^n.
class EtaQuotient {
public:
    EtaQuotient() = default;
    // Throws std::invalid_argument if a key lies outside [0, level_exp].
    EtaQuotient(int level_exp, const std::map<int, long>& exps);

    int level_exp() const { return level_exp_; }
    // Only nonzero exponents are stored.
    const std::map<int, long>& exps() const { return exps_; }
    long exponent(int k) const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    int level_exp_ = 0;
    std::map<int, long> exps_;
};

// x_n = eta(2^{n-1}t)^6 / (eta(2^{n-2}t)^2 eta(2^n t)^4)
EtaQuotient x_quotient(int n);
// y_n = eta(16t)^2 eta(2^{n-1}t) / (eta(8t) eta(2^n t)^2)
EtaQuotient y_quotient(int n);

// eta(m*tau), certified for exponents < trunc.
QExp eta_series(std::int64_t scale, std::int64_t trunc);

// theta_which(scale*tau) by direct lattice summation; which is 2, 3 or 4.
QExp theta_series(int which, std::int64_t scale, std::int64_t trunc);

// Product of eta powers, certified for exponents < trunc.
QExp eta_quotient_series(const EtaQuotient& eq, std::int64_t trunc);

struct NewmanVerdict {
    // Sum e_k, sum k e_k, sum e_k 2^k, sum e_k 2^{n-k}.
    std::array<Integer, 4> sums;
    std::array<bool, 4> holds{};

    bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
    // 1-based index of the first failing condition.
    std::optional<int> first_failure() const;
    std::string describe() const;
};

NewmanVerdict newman_conditions(const EtaQuotient& eq);

// Width of the cusp a/2^k on Gamma_0(2^n), 0 <= k <= n (k = n is infinity).
std::int64_t cusp_width(int n, int k);

// The cusp a/2^k of Gamma_0(2^n); k == n is infinity, written 1/2^n.
struct Cusp {
    std::int64_t a = 1;
    int k = 0;
    int n = 0;
    std::int64_t width = 1;

    bool is_infinity() const { return k == n; }
    std::string label() const;
};

// One representative per cusp class, ordered by k then a.
std::vector<Cusp> cusps_of(int n);

// Order of vanishing at c, in the local parameter of c (Ligozat).
Rational order_at_cusp(const EtaQuotient& eq, const Cusp& c);

// Sum of order_at_cusp over all cusps of Gamma_0(2^n). Each local order is
// already the width times the order of f o sigma at infinity, so this is the
// width-weighted divisor degree; zero for any modular function.
Rational valence_sum(const EtaQuotient& eq);

// Index of Gamma_0(N) in SL_2(Z).
std::int64_t gamma0_index(std::int64_t N);
std::int64_t gamma0_cusp_count(std::int64_t N);
std::int64_t genus_X0(std::int64_t N);
// (d-1)(d-2)/2
std::int64_t genus_fermat(std::int64_t d);

// x_n = 2 theta_3(2^{n-1}t)/theta_2(2^{n-1}t) and
// y_n = theta_2(8t)/theta_2(2^{n-1}t), built from theta sums.
QExp x_series(int n, std::int64_t trunc);
QExp y_series(int n, std::int64_t trunc);

} // namespace x0

#endif

#include "x0curve/kernels.hpp"

#include <algorithm>
#include <cstring>

#include <omp.h>

namespace x0::kernels {

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::span<const mpz_class> head(std::span<const mpz_class> v, std::size_t n)
{
    return v.first(std::min(v.size(), n));
}

std::size_t max_bits(std::span<const mpz_class> v)
{
    std::size_t bits = 0;
    for (const auto& c : v)
        if (sgn(c) != 0)
            bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

std::size_t ceil_log2(std::size_t m)
{
    std::size_t r = 0;
    while ((std::size_t{1} << r) < m)
        ++r;
    return r;
}

mpz_class from_limbs(const mp_limb_t* src, std::size_t n)
{
    mpz_class z;
    if (n == 0)
        return z;
    mp_limb_t* dst = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(n));
    std::memcpy(dst, src, n * sizeof(mp_limb_t));
    mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(n));
    return z;
}

// sum_i v[i] * 2^(i * slot_limbs * kLimbBits)
mpz_class pack(std::span<const mpz_class> v, std::size_t slot_limbs)
{
    std::vector<mp_limb_t> pos(v.size() * slot_limbs, 0);
    std::vector<mp_limb_t> neg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const mpz_srcptr z = v[i].get_mpz_t();
        const int s = mpz_sgn(z);
        if (s == 0)
            continue;
        if (s < 0 && neg.empty())
            neg.assign(v.size() * slot_limbs, 0);
        const std::size_t n = mpz_size(z);
        mp_limb_t* dst = (s > 0 ? pos.data() : neg.data()) + i * slot_limbs;
        std::memcpy(dst, mpz_limbs_read(z), n * sizeof(mp_limb_t));
    }
    mpz_class packed = from_limbs(pos.data(), pos.size());
    if (!neg.empty())
        packed -= from_limbs(neg.data(), neg.size());
    return packed;
}

// Balanced-digit decomposition of r in base 2^(slot_limbs*kLimbBits);
// digits are known to lie strictly inside (-base/2, base/2).
Coeffs unpack(const mpz_class& r, std::size_t slot_limbs, std::size_t out_len)
{
    Coeffs out(out_len);
    const int sign = sgn(r);
    if (sign == 0)
        return out;
    const mpz_class mag = abs(r);
    const std::size_t nl = mpz_size(mag.get_mpz_t());
    const mp_limb_t* d = mpz_limbs_read(mag.get_mpz_t());

    const std::size_t slot_bits = slot_limbs * kLimbBits;
    mpz_class base, half;
    mpz_ui_pow_ui(base.get_mpz_t(), 2, slot_bits);
    half = base >> 1;

    std::vector<mp_limb_t> chunk(slot_limbs);
    int carry = 0;
    for (std::size_t i = 0; i < out_len; ++i) {
        const std::size_t lo = i * slot_limbs;
        std::fill(chunk.begin(), chunk.end(), mp_limb_t{0});
        if (lo < nl)
            std::memcpy(chunk.data(), d + lo, std::min(slot_limbs, nl - lo) * sizeof(mp_limb_t));
        mpz_class u = from_limbs(chunk.data(), slot_limbs);
        if (carry)
            u += 1;
        if (u >= half) {
            u -= base;
            carry = 1;
        } else {
            carry = 0;
        }
        out[i] = sign < 0 ? mpz_class(-u) : u;
    }
    return out;
}

} // namespace

Coeffs convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                       std::size_t out_len)
{
    a = head(a, out_len);
    b = head(b, out_len);
    Coeffs c(out_len);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        const std::size_t jmax = std::min(b.size(), out_len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return c;
}

Coeffs convolve_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b,
                         std::size_t out_len)
{
    a = head(a, out_len);
    b = head(b, out_len);
    const std::size_t n = std::min(out_len, full_length(a.size(), b.size()));
    Coeffs c(out_len);
    const auto na = static_cast<std::ptrdiff_t>(a.size());
    const auto nb = static_cast<std::ptrdiff_t>(b.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
        mpz_class acc;
        const std::ptrdiff_t ilo = std::max<std::ptrdiff_t>(0, k - nb + 1);
        const std::ptrdiff_t ihi = std::min<std::ptrdiff_t>(k, na - 1);
        for (std::ptrdiff_t i = ilo; i <= ihi; ++i)
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        c[k] = std::move(acc);
    }
    return c;
}

Coeffs convolve_kronecker(std::span<const mpz_class> a, std::span<const mpz_class> b,
                          std::size_t out_len)
{
    const bool square = a.data() == b.data() && a.size() == b.size();
    a = head(a, out_len);
    b = head(b, out_len);
    const std::size_t bits_a = max_bits(a);
    const std::size_t bits_b = square ? bits_a : max_bits(b);
    if (bits_a == 0 || bits_b == 0)
        return Coeffs(out_len);

    // |c[k]| < min(na, nb) * 2^(bits_a + bits_b) must fit below half a slot.
    const std::size_t need =
        bits_a + bits_b + ceil_log2(std::min(a.size(), b.size())) + 2;
    const std::size_t slot_limbs = (need + kLimbBits - 1) / kLimbBits;

    const mpz_class pa = pack(a, slot_limbs);
    mpz_class prod;
    if (square) {
        prod = pa * pa;
    } else {
        const mpz_class pb = pack(b, slot_limbs);
        prod = pa * pb;
    }
    return unpack(prod, slot_limbs, out_len);
}

Coeffs convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
                std::size_t out_len)
{
    const std::size_t small = std::min({a.size(), b.size(), out_len});
    if (small <= 16)
        return convolve_serial(a, b, out_len);
    if (small <= 48 && omp_get_max_threads() > 1)
        return convolve_parallel(a, b, out_len);
    return convolve_kronecker(a, b, out_len);
}

} // namespace x0::kernels

#ifndef X0CURVE_KERNELS_HPP
#define X0CURVE_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

// Exact integer convolution kernels.
//
// Every variant computes the truncated Cauchy product
//     c[k] = sum_{i+j=k} a[i] * b[j],   0 <= k < out_len
// and all of them return bit-identical results. convolve_serial is the
// reference; the other two exist for speed and are checked against it.
namespace x0::kernels {

using Coeffs = std::vector<mpz_class>;

Coeffs convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                       std::size_t out_len);

// Schoolbook product with the output index distributed over OpenMP threads.
Coeffs convolve_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b,
                         std::size_t out_len);

// Kronecker substitution: both inputs are packed into one big integer each
// (signed digits in limb-aligned slots) and multiplied by GMP.
Coeffs convolve_kronecker(std::span<const mpz_class> a, std::span<const mpz_class> b,
                          std::size_t out_len);

// Picks a variant from the input sizes.
Coeffs convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
                std::size_t out_len);

// Length of the full (untruncated) product, 0 if either input is empty.
inline std::size_t full_length(std::size_t na, std::size_t nb)
{
    return (na == 0 || nb == 0) ? 0 : na + nb - 1;
}

} // namespace x0::kernels

#endif

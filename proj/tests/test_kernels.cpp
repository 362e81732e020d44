#include <doctest.h>

#include <random>

#include "x0curve/kernels.hpp"

using namespace x0::kernels;

namespace {

Coeffs random_coeffs(std::mt19937_64& rng, std::size_t n, int bits)
{
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(static_cast<unsigned long>(rng()));
    std::uniform_int_distribution<int> sign(0, 2);
    Coeffs v(n);
    for (auto& c : v) {
        c = gr.get_z_bits(bits);
        switch (sign(rng)) {
        case 0: c = -c; break;
        case 1: break;
        default:
            if (rng() % 4 == 0)
                c = 0;
        }
    }
    return v;
}

} // namespace

TEST_CASE("schoolbook product of small fixed inputs")
{
    const Coeffs a{1, 1};
    const Coeffs b{1, -1};
    const Coeffs want{1, 0, -1};
    CHECK(convolve_serial(a, b, 3) == want);
    CHECK(convolve_parallel(a, b, 3) == want);
    CHECK(convolve_kronecker(a, b, 3) == want);
    CHECK(convolve_serial(a, b, 2) == Coeffs{1, 0});
    CHECK(full_length(0, 5) == 0);
    CHECK(full_length(3, 4) == 6);
}

TEST_CASE("out_len past the full product pads with zeros")
{
    const Coeffs a{2, 3};
    const Coeffs b{5};
    CHECK(convolve_kronecker(a, b, 4) == Coeffs{10, 15, 0, 0});
    CHECK(convolve_parallel(a, b, 4) == Coeffs{10, 15, 0, 0});
}

TEST_CASE("empty inputs")
{
    const Coeffs a;
    const Coeffs b{1, 2};
    CHECK(convolve_serial(a, b, 3) == Coeffs{0, 0, 0});
    CHECK(convolve_kronecker(a, b, 3) == Coeffs{0, 0, 0});
    CHECK(convolve(a, b, 0).empty());
}

TEST_CASE("all variants agree with the serial reference on random signed inputs")
{
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> len(1, 120);
    std::uniform_int_distribution<int> bits(1, 300);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t na = len(rng), nb = len(rng);
        const Coeffs a = random_coeffs(rng, na, bits(rng));
        const Coeffs b = random_coeffs(rng, nb, bits(rng));
        const std::size_t out = std::uniform_int_distribution<std::size_t>(1, na + nb + 3)(rng);
        const Coeffs ref = convolve_serial(a, b, out);
        REQUIRE(convolve_parallel(a, b, out) == ref);
        REQUIRE(convolve_kronecker(a, b, out) == ref);
        REQUIRE(convolve(a, b, out) == ref);
    }
}

TEST_CASE("squaring path of the Kronecker kernel")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Coeffs a = random_coeffs(rng, 1 + rng() % 200, 1 + rng() % 500);
        const std::size_t out = full_length(a.size(), a.size());
        REQUIRE(convolve_kronecker(a, a, out) == convolve_serial(a, a, out));
    }
}

TEST_CASE("carries across slots with extreme magnitudes")
{
    // Alternating signs of maximal size force borrows between packed digits.
    Coeffs a(64), b(64);
    const mpz_class big = (mpz_class(1) << 640) - 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = (i % 2 == 0) ? big : mpz_class(-big);
        b[i] = (i % 3 == 0) ? mpz_class(-big) : big;
    }
    const std::size_t out = full_length(64, 64);
    CHECK(convolve_kronecker(a, b, out) == convolve_serial(a, b, out));
    CHECK(convolve_parallel(a, b, out) == convolve_serial(a, b, out));
}

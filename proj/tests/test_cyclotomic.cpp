#include <doctest.h>

#include <limits>
#include <random>

#include "helpers.hpp"
#include "qsym/cyclotomic.hpp"

using namespace qsym;
using qsym::testing::complex_close;
using qsym::testing::random_cyc;

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(105) == 48);
    CHECK_THROWS_AS(euler_phi(0), InvalidParameterError);
}

TEST_CASE("cyclotomic polynomials match the classical table") {
    using V = std::vector<std::int64_t>;
    CHECK(cyclotomic_polynomial(1) == V{-1, 1});
    CHECK(cyclotomic_polynomial(2) == V{1, 1});
    CHECK(cyclotomic_polynomial(3) == V{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == V{1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == V{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == V{1, -1, 1});
    CHECK(cyclotomic_polynomial(8) == V{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(10) == V{1, -1, 1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
    // first index whose coefficients leave {-1, 0, 1}
    const auto c105 = cyclotomic_polynomial(105);
    REQUIRE(c105.size() == 49);
    CHECK(c105[7] == -2);
    CHECK(std::vector<std::int64_t>(c105.begin(), c105.begin() + 12) ==
          V{1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0});
}

TEST_CASE("product of cyclotomics over divisors gives x^m - 1") {
    for (const std::int64_t m : {6, 12}) {
        std::vector<std::int64_t> prod{1};
        for (std::int64_t d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            const auto phi = cyclotomic_polynomial(d);
            std::vector<std::int64_t> next(prod.size() + phi.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        std::vector<std::int64_t> expect(static_cast<std::size_t>(m) + 1, 0);
        expect.front() = -1;
        expect.back() = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("third roots of unity sum to zero") {
    const CycInt z = CycInt::from_phase(Phase(1, 3), 3);
    const CycInt z2 = CycInt::from_phase(Phase(2, 3), 3);
    CHECK((CycInt::one(3) + z + z2).is_zero());
}

TEST_CASE("ring identities") {
    std::mt19937_64 rng(11);
    const CycInt a = random_cyc(12, rng);
    CHECK(a * CycInt::one(12) == a);
    CHECK((a - a).is_zero());
    CHECK(a + CycInt::zero(12) == a);
    CHECK(-(-a) == a);
    CHECK(a * 3 == a + a + a);
    CHECK(CycInt::from_integer(-1, 2) == -CycInt::one(2));
}

TEST_CASE("phase embedding is multiplicative and faithful") {
    CHECK(CycInt::from_phase(Phase(1, 2), 2).coeffs() == std::vector<std::int64_t>{-1});
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> num(0, 11);
    for (int t = 0; t < 100; ++t) {
        const Phase p(num(rng), 12);
        const Phase r(num(rng), 12);
        CHECK(CycInt::from_phase(p * r, 12) ==
              CycInt::from_phase(p, 12) * CycInt::from_phase(r, 12));
    }
    CHECK_THROWS_AS(CycInt::from_phase(Phase(1, 5), 12), OrderMismatchError);
}

TEST_CASE("orders one and two degenerate to plain integers") {
    CHECK(CycInt::one(1).coeffs().size() == 1);
    CHECK(CycInt::one(2).coeffs().size() == 1);
    const CycInt five = CycInt::from_integer(5, 2);
    const CycInt m3 = CycInt::from_integer(-3, 2);
    CHECK((five * m3).coeffs() == std::vector<std::int64_t>{-15});
}

TEST_CASE("mixed orders compare at the lcm and rescale explicitly") {
    // zeta_6 = -zeta_3^2
    CHECK(CycInt::from_phase(Phase(1, 6), 6) == -CycInt::from_phase(Phase(2, 3), 3));
    CHECK(CycInt::from_phase(Phase(1, 3), 3) == CycInt::from_phase(Phase(1, 3), 6));
    CHECK(CycInt::one(3).rescaled(6) == CycInt::one(6));
    CHECK_THROWS_AS(CycInt::one(4).rescaled(6), OrderMismatchError);
    // arithmetic refuses mixed orders outright
    CHECK_THROWS_AS(CycInt::one(3) + CycInt::one(4), OrderMismatchError);
    CHECK_NOTHROW(CycInt::one(3).rescaled(12) + CycInt::one(4).rescaled(12));
}

TEST_CASE("exact arithmetic agrees with floating evaluation") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> order_pick(1, 12);
    for (int t = 0; t < 200; ++t) {
        const std::int64_t m = order_pick(rng);
        const CycInt a = random_cyc(m, rng);
        const CycInt b = random_cyc(m, rng);
        CHECK(complex_close((a * b).to_complex(), a.to_complex() * b.to_complex()));
        CHECK(complex_close((a + b).to_complex(), a.to_complex() + b.to_complex()));
        CHECK(complex_close((a - b).to_complex(), a.to_complex() - b.to_complex()));
    }
}

TEST_CASE("coefficient overflow throws") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    const CycInt a = CycInt::from_integer(big, 2);
    CHECK_THROWS_AS(a * 2, OverflowError);
    CHECK_THROWS_AS(a + CycInt::one(2), OverflowError);
}

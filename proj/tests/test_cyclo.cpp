#include <catch2/catch_amalgamated.hpp>

#include <orbijet/cyclo.hpp>
#include <orbijet/errors.hpp>

#include "oracles.hpp"

using namespace orbijet;

namespace
{

CycScalar random_scalar(std::mt19937_64 &rng, int m)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> cs;
    for (int k = 0; k < m; ++k) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        cs.push_back(q);
    }
    return CycScalar(m, cs);
}

bool close(std::complex<double> a, std::complex<double> b)
{
    return std::abs(a - b) < 1e-9 * (1 + std::abs(a) + std::abs(b));
}

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == ints({-1, 1}));
    CHECK(cyclotomic_poly(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == ints({1, -1, 1}));
    for (int m = 1; m <= 40; ++m) {
        INFO("m = " << m);
        CHECK(cyclotomic_poly(m) == oracle::mobius_cyclotomic(m));
        CHECK(static_cast<int>(cyclotomic_poly(m).size()) == euler_phi(m) + 1);
    }
    for (int p : {2, 3, 5, 7, 11, 13}) {
        CHECK(cyclotomic_poly(p) == std::vector<Integer>(static_cast<std::size_t>(p), 1));
    }
}

TEST_CASE("field arithmetic examples")
{
    const auto z4 = zeta_pow(4, 1);
    CHECK(z4 * z4 == CycScalar(4, -1L));
    const auto z3 = zeta_pow(3, 1);
    const auto one3 = CycScalar(3, 1L);
    CHECK((one3 + z3) * (one3 + z3 * z3) == one3);
    CHECK(cyc_arith(CycScalar(2, Rational(1, 2)), CycScalar(2, -1L), CycOp::div) == CycScalar(2, Rational(-1, 2)));
    CHECK(zeta_pow(2, 1) == CycScalar(2, -1L));
    CHECK(zeta_pow(4, 6) == CycScalar(4, -1L));
    CHECK(zeta_pow(3, 2) == CycScalar(3, std::vector<Rational>{-1, -1}));
    CHECK(zeta_pow(3, 2).str() == "-1 - zeta");
    CHECK(zeta_pow(5, -1) == zeta_pow(5, 4));
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(CycScalar(3, 1L) + CycScalar(4, 1L), IncompatibleField);
    CHECK_THROWS_AS(CycScalar(3, 1L) / CycScalar(3), ArithmeticError);
    CHECK_THROWS_AS(CycScalar(5).inverse(), ArithmeticError);
}

TEST_CASE("roots of unity")
{
    for (int m = 1; m <= 12; ++m) {
        CHECK(zeta_pow(m, m).is_one());
        CycScalar sum(m);
        for (int k = 0; k < m; ++k) {
            sum += zeta_pow(m, k);
        }
        if (m > 1) {
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("field axioms and complex embedding on random triples")
{
    std::mt19937_64 rng(11);
    for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_scalar(rng, m);
            const auto b = random_scalar(rng, m);
            const auto c = random_scalar(rng, m);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a - a == CycScalar(m));
            CHECK(close(oracle::embed(a * b), oracle::embed(a) * oracle::embed(b)));
            CHECK(close(oracle::embed(a + b), oracle::embed(a) + oracle::embed(b)));
            if (!b.is_zero()) {
                CHECK(b * b.inverse() == CycScalar(m, 1L));
                CHECK(close(oracle::embed(a / b), oracle::embed(a) / oracle::embed(b)));
            }
        }
    }
}

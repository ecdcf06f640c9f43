#include <catch2/catch_amalgamated.hpp>

#include <orbijet/errors.hpp>
#include <orbijet/jetpoly.hpp>
#include <orbijet/series.hpp>

#include "oracles.hpp"

using namespace orbijet;

namespace
{

JetPoly x(int m, int i, long level_ticks = 0)
{
    return JetPoly::variable(m, JetVar{Alphabet::zero, i, level_ticks});
}

} // namespace

TEST_CASE("ticks and printing")
{
    CHECK(ticks_to_rational(-3, 2) == Rational(-3, 2));
    CHECK(rational_to_ticks(Rational(-3, 2), 4) == -6);
    CHECK_THROWS_AS(rational_to_ticks(Rational(1, 3), 2), PreconditionError);
    CHECK(floor_ticks(Rational(5, 2), 1) == 2);
    CHECK(floor_ticks(Rational(-1, 2), 1) == -1);
    CHECK(JetVar{Alphabet::zero, 1, -3}.str(2) == "x1[-3/2]");
    CHECK(JetVar{Alphabet::infinity, 1, -1}.str(2) == "xinf1[-1/2]");
    CHECK(JetVar{Alphabet::zero, 2, -4}.str(2) == "x2[-2]");
}

TEST_CASE("derivation T")
{
    CHECK(derivation_T(x(1, 1)) == x(1, 1, -1));
    CHECK(derivation_T(x(1, 1, -1)) == x(1, 1, -2) * Rational(2));
    CHECK(derivation_T(x(1, 1) * x(1, 1)) == x(1, 1) * x(1, 1, -1) * Rational(2));
    CHECK(derivation_T(JetPoly::one(3)).is_zero());
    CHECK(divided_T_power(x(1, 1), 3) == x(1, 1, -3));
}

TEST_CASE("automorphism and eigenspaces")
{
    const std::vector<int> a1{1};
    CHECK(apply_automorphism(std::vector<int>{1}, x(2, 1)) == -x(2, 1));
    CHECK(apply_automorphism(a1, x(2, 1) * x(2, 1)) == x(2, 1) * x(2, 1));
    const auto cube = x(4, 1, -4).pow(3);
    CHECK(apply_automorphism(a1, cube) == cube * (-zeta_pow(4, 1)));

    const auto p = x(2, 1) + x(2, 1) * x(2, 1);
    const auto parts = eigen_decompose(a1, p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == x(2, 1) * x(2, 1));
    CHECK(parts[1] == x(2, 1));
    CHECK(eigen_index(std::vector<int>{1, 2}, x(3, 1) * x(3, 2)) == 0);
    CHECK_FALSE(eigen_index(a1, p).has_value());
}

TEST_CASE("random properties of T and g")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + trial % 4;
        std::vector<int> alpha{trial % m, (trial / 2) % m};
        const auto p = oracle::random_poly(rng, m, 2, 3, 3, 2);
        const auto q = oracle::random_poly(rng, m, 2, 3, 2, 2);
        CHECK(derivation_T(p * q) == derivation_T(p) * q + p * derivation_T(q));
        CHECK(derivation_T(apply_automorphism(alpha, p)) == apply_automorphism(alpha, derivation_T(p)));
        JetPoly sum(m);
        const auto parts = eigen_decompose(alpha, p);
        for (int r = 0; r < m; ++r) {
            sum += parts[static_cast<std::size_t>(r)];
            CHECK(apply_automorphism(alpha, parts[static_cast<std::size_t>(r)])
                  == parts[static_cast<std::size_t>(r)] * zeta_pow(m, r));
        }
        CHECK(sum == p);
        for (const auto &[mono, c] : p.terms()) {
            for (const auto &[mono2, c2] : q.terms()) {
                CHECK((mono * mono2).weight_ticks() == mono.weight_ticks() + mono2.weight_ticks());
            }
        }
    }
}

TEST_CASE("substitution examples")
{
    const auto levels1 = JetLevels::untwisted(1, 1);
    const auto s = substitute_jets(x(1, 1) * x(1, 1), levels1, Rational(2));
    CHECK(s.coefficient(Rational(0)) == x(1, 1) * x(1, 1));
    CHECK(s.coefficient(Rational(1)) == x(1, 1) * x(1, 1, -1) * Rational(2));
    CHECK(s.coefficient(Rational(2)) == x(1, 1, -1) * x(1, 1, -1) + x(1, 1) * x(1, 1, -2) * Rational(2));
    CHECK_THROWS_AS(s.coefficient(Rational(3)), TruncationError);
    CHECK(series_coefficient(s, Rational(1)) == x(1, 1) * x(1, 1, -1) * Rational(2));

    const std::vector<int> a1{1};
    const auto tw = substitute_jets(x(2, 1) * x(2, 1), JetLevels::twisted(2, a1), Rational(3));
    CHECK(tw.coefficient(Rational(0)).is_zero());
    CHECK(tw.coefficient(Rational(1)) == x(2, 1, -1) * x(2, 1, -1));
    CHECK(tw.coefficient(Rational(2)) == x(2, 1, -1) * x(2, 1, -3) * Rational(2));
    CHECK(tw.coefficient(Rational(3)) == x(2, 1, -3) * x(2, 1, -3) + x(2, 1, -1) * x(2, 1, -5) * Rational(2));
    CHECK(tw.coefficient(Rational(1, 2)).is_zero());

    CHECK_THROWS_AS(substitute_jets(x(1, 1, -1), levels1, Rational(2)), PreconditionError);
}

TEST_CASE("substitution agrees with divided T powers and with naive convolution")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = oracle::random_poly(rng, 1, 2, 3, 3, 0);
        const auto s = substitute_jets(p, JetLevels::untwisted(2, 1), Rational(5));
        for (int n = 0; n <= 5; ++n) {
            CHECK(s.coefficient_ticks(n) == divided_T_power(p, n));
        }
    }
    for (int m : {2, 3, 4}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::vector<int> alpha{trial % m, (trial + 1) % m};
            const auto p = oracle::random_poly(rng, m, 2, 3, 3, 0);
            const long w = 3L * m;
            const auto s = substitute_jets_ticks(p, JetLevels::twisted(m, alpha), w);
            const auto dense = oracle::naive_substitute(p, alpha, m, w);
            for (long e = 0; e <= w; ++e) {
                auto it = dense.find(e);
                CHECK(s.coefficient_ticks(e) == (it == dense.end() ? JetPoly(m) : it->second));
            }
        }
    }
}

TEST_CASE("series truncation tracking")
{
    PuiseuxSeries a(2, 4);
    a.add_term(1, x(2, 1));
    a.add_term(6, x(2, 2)); // beyond truncation, dropped
    CHECK(a.coeffs().size() == 1);
    PuiseuxSeries b(2, 2);
    b.add_term(-1, x(2, 2));
    const auto c = a * b;
    // min(4 + (-1), 2 + 1)
    CHECK(c.trunc_ticks() == 3);
    CHECK(c.coefficient_ticks(0) == x(2, 1) * x(2, 2));
    CHECK_THROWS_AS(c.coefficient_ticks(4), TruncationError);
    const auto d = a.derivative();
    CHECK(d.trunc_ticks() == 2);
    CHECK(d.coefficient_ticks(-1) == x(2, 1) * Rational(1, 2));
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binomial(Rational(-1), 3) == Rational(-1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/series.hpp"
#include "oracles.hpp"

using namespace halg;

namespace {

PowerSeries from_ints(const std::vector<std::int64_t>& v) {
    std::vector<mpq_class> c;
    for (auto x : v) c.emplace_back(x);
    return PowerSeries(std::move(c));
}

bool equals_ints(const PowerSeries& s, const std::vector<std::int64_t>& v) {
    if (s.trunc() + 1 != v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (s[i] != v[i]) return false;
    return true;
}

PowerSeries quad_inverse(std::uint32_t n, std::uint32_t r, std::uint32_t d) {
    return inverse(PowerSeries::polynomial(
        d, {{0, 1}, {1, -mpq_class(n)}, {2, mpq_class(r)}}));
}

}  // namespace

TEST_CASE("inverse: geometric series and the recurrence oracle") {
    CHECK(equals_ints(inverse(PowerSeries::polynomial(3, {{0, 1}, {1, -1}})),
                      {1, 1, 1, 1}));
    PowerSeries denom =
        PowerSeries::polynomial(4, {{0, 1}, {1, -4}, {2, 3}, {4, -1}});
    PowerSeries inv = inverse(denom);
    auto expect = oracle::recurrence_inverse({1, -4, 3, 0, -1}, 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(inv[k] == expect[k]);
    CHECK(equals_ints(inv, {1, 4, 13, 40, 122}));
    CHECK_THROWS_WITH_AS(inverse(PowerSeries(3)), "non-invertible series",
                         std::domain_error);
}

TEST_CASE("mul/add and mixed truncation") {
    PowerSeries a = PowerSeries::polynomial(2, {{0, 1}, {1, 1}});
    PowerSeries b = PowerSeries::polynomial(2, {{0, 1}, {1, -1}});
    CHECK(equals_ints(mul(a, b), {1, 0, -1}));
    CHECK(equals_ints(add(a, b), {2, 0, 0}));
    PowerSeries longer = PowerSeries::one(5);
    CHECK(mul(a, longer).trunc() == 2);  // shorter truncation wins
    CHECK(add(longer, a).trunc() == 2);
    CHECK(equals_ints(sub(a, b), {0, 2, 0}));
    CHECK(equals_ints(alternate(from_ints({1, 2, 3, 4})), {1, -2, 3, -4}));
}

TEST_CASE("bracket operator") {
    CHECK(equals_ints(bracket(from_ints({1, -1})), {1, 0}));
    CHECK(equals_ints(bracket(from_ints({1, 2, 0, 5})), {1, 2, 0, 0}));
    PowerSeries s = quad_inverse(2, 2, 4);
    CHECK(equals_ints(s, {1, 2, 2, 0, -4}));
    CHECK(equals_ints(bracket(s), {1, 2, 2, 0, 0}));
    // applied literally: a nonpositive constant term kills everything
    CHECK(equals_ints(bracket(from_ints({0, 3, 2})), {0, 0, 0}));
    CHECK(equals_ints(bracket(from_ints({-1, 3})), {0, 0}));
    // idempotent, and nothing positive after the first nonpositive
    oracle::TestRng rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<std::int64_t> v;
        for (int k = 0; k < 8; ++k)
            v.push_back(static_cast<std::int64_t>(rng.below(7)) - 2);
        PowerSeries b = bracket(from_ints(v));
        CHECK(bracket(b) == b);
        bool dead = false;
        for (std::size_t k = 0; k <= b.trunc(); ++k) {
            if (dead) CHECK(b[k] == 0);
            if (b[k] <= 0) dead = true;
        }
    }
}

TEST_CASE("lex compare and coefficientwise order") {
    CHECK(lex_compare(from_ints({1, 2}), from_ints({1, 2})) == Ordering::equal);
    CHECK(lex_compare(from_ints({1, 3, 0}), from_ints({1, 2, 9})) ==
          Ordering::greater);
    CHECK(lex_compare(from_ints({1, 1, 9}), from_ints({1, 2, 0})) ==
          Ordering::less);
    CHECK_THROWS_AS(lex_compare(from_ints({1}), from_ints({1, 2})),
                    std::invalid_argument);
    CHECK(coeffwise_ge(from_ints({1, 2}), from_ints({1, 2})));
    CHECK_FALSE(coeffwise_ge(from_ints({1, 1}), from_ints({1, 2})));
    // ge implies lex in {equal, greater}
    oracle::TestRng rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::int64_t> a, b;
        for (int k = 0; k < 6; ++k) {
            std::int64_t x = static_cast<std::int64_t>(rng.below(5)) - 1;
            a.push_back(x);
            b.push_back(x - static_cast<std::int64_t>(rng.below(3)));
        }
        PowerSeries sa = from_ints(a), sb = from_ints(b);
        REQUIRE(coeffwise_ge(sa, sb));
        CHECK(lex_compare(sa, sb) != Ordering::less);
    }
}

TEST_CASE("froberg series") {
    CHECK(equals_ints(froberg_series(AlgebraType(3, {2, 2, 2}), 4),
                      {1, 3, 3, 1, 0}));
    CHECK(equals_ints(froberg_series(AlgebraType(2, {2, 2, 3}), 4),
                      {1, 2, 1, 0, 0}));
    CHECK(equals_ints(froberg_series(AlgebraType(3, {2, 2, 2, 3}), 4),
                      {1, 3, 3, 0, 0}));
    // nonnegative, and equal to the raw product while that stays positive
    oracle::TestRng rng(3);
    for (int iter = 0; iter < 30; ++iter) {
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(4));
        std::vector<std::uint32_t> degs;
        for (std::uint32_t i = 0; i < rng.below(5); ++i)
            degs.push_back(2 + static_cast<std::uint32_t>(rng.below(3)));
        AlgebraType t(n, degs);
        PowerSeries f = froberg_series(t, 8);
        PowerSeries raw = PowerSeries::one(8);
        for (std::uint32_t d : t.degrees)
            raw = mul(raw, PowerSeries::polynomial(8, {{0, 1}, {d, -1}}));
        PowerSeries lin = PowerSeries::polynomial(8, {{0, 1}, {1, -1}});
        for (std::uint32_t i = 0; i < n; ++i) raw = mul(raw, inverse(lin));
        for (std::size_t k = 0; k <= 8; ++k) {
            CHECK(f[k] >= 0);
            if (raw[k] <= 0) break;
            CHECK(f[k] == raw[k]);
        }
    }
}

TEST_CASE("anick polynomial") {
    CHECK(equals_ints(anick_polynomial(AlgebraType::quadratic(2, 1)),
                      {1, -2, 1}));
    CHECK(equals_ints(anick_polynomial(AlgebraType::quadratic(4, 4)),
                      {1, -4, 4}));
    CHECK(equals_ints(anick_polynomial(AlgebraType(2, {2, 7})),
                      {1, -2, 1, 0, 0, 0, 0, 1}));
    CHECK(equals_ints(anick_polynomial(AlgebraType(3, {})), {1, -3}));
}

TEST_CASE("exp operator") {
    CHECK(equals_ints(exp_op(from_ints({0, 4}).extended(4)), {1, 4, 6, 4, 1}));
    CHECK(equals_ints(exp_op(from_ints({0, 1, 1})), {1, 1, 1}));
    // (1+z)^4 (1+z^3)^4 / ((1-z^2)^6 (1-z^4)^7) mod z^5, by direct
    // polynomial arithmetic
    PowerSeries L = from_ints({0, 4, 6, 4, 7});
    std::vector<mpz_class> acc{1};
    acc = oracle::poly_mul(acc, {1, 4, 6, 4, 1}, 4);              // (1+z)^4
    acc = oracle::poly_mul(acc, {1, 0, 0, 4}, 4);                 // (1+z^3)^4
    acc = oracle::poly_mul(acc, {1, 0, 6, 0, 21}, 4);             // (1-z^2)^-6
    acc = oracle::poly_mul(acc, {1, 0, 0, 0, 7}, 4);              // (1-z^4)^-7
    PowerSeries e = exp_op(L);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(e[k] == acc[k]);
    CHECK(equals_ints(e, {1, 4, 12, 32, 81}));
    CHECK_THROWS_WITH_AS(exp_op(from_ints({0, -1})), "not a dimension series",
                         std::invalid_argument);
    CHECK_THROWS_AS(exp_op(from_ints({1, 2})), std::invalid_argument);
    PowerSeries half(2);
    half[1] = mpq_class(1, 2);
    CHECK_THROWS_AS(exp_op(half), std::invalid_argument);
}

TEST_CASE("log operator") {
    CHECK(equals_ints(log_op(from_ints({1, 1})), {0, 1}));
    CHECK(equals_ints(log_op(inverse(PowerSeries::polynomial(
                          2, {{0, 1}, {1, -1}}))),
                      {0, 1, 1}));
    CHECK(equals_ints(log_op(quad_inverse(4, 4, 4)), {0, 4, 6, 4, 6}));
    CHECK_THROWS_AS(log_op(from_ints({2, 1})), std::invalid_argument);
}

TEST_CASE("exp/log round trips") {
    oracle::TestRng rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<std::int64_t> v{0};
        for (int k = 1; k <= 8; ++k)
            v.push_back(static_cast<std::int64_t>(rng.below(5)));
        PowerSeries L = from_ints(v);
        PowerSeries V = exp_op(L);
        CHECK(log_op(V) == L);
        CHECK(exp_op(log_op(V)) == V);
    }
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("positivity of quadratic inverses") {
    auto r1 = quadratic_inverse_positivity(2, 1, 10);
    CHECK(r1.all_positive);
    CHECK_FALSE(r1.first_nonpositive_degree.has_value());
    auto r2 = quadratic_inverse_positivity(2, 2, 5);
    CHECK_FALSE(r2.all_positive);
    CHECK(r2.first_nonpositive_degree == 3);  // a_3 = 0
    auto r3 = quadratic_inverse_positivity(2, 3, 5);
    CHECK_FALSE(r3.all_positive);
    CHECK(r3.first_nonpositive_degree == 3);  // a_3 = -4
    PowerSeries s = quad_inverse(2, 3, 3);
    CHECK(s[3] == -4);
}

TEST_CASE("vanishing threshold") {
    CHECK(vanishing_threshold(2, 2) == 3);
    CHECK(vanishing_threshold(2, 4) == 2);
    CHECK(vanishing_threshold(2, 3) == 3);
    CHECK_THROWS_WITH_AS(vanishing_threshold(2, 1), "series never vanishes",
                         std::domain_error);
    // the corollary's spot thresholds: B_3 = 0 iff r >= n^2/2,
    // B_5 = 0 iff r >= n^2/3
    CHECK(vanishing_threshold(4, 8) == 3);
    CHECK(vanishing_threshold(4, 7) > 3);
    CHECK(vanishing_threshold(6, 12) == 5);
    CHECK(vanishing_threshold(6, 11) > 5);
    // positivity and threshold agree across a sweep
    for (std::uint32_t n = 1; n <= 6; ++n) {
        for (std::uint64_t r = 0; r <= std::uint64_t(n) * n; ++r) {
            auto rep = quadratic_inverse_positivity(n, r, 60);
            if (4 * r <= std::uint64_t(n) * n) {
                CHECK(rep.all_positive);
            } else {
                REQUIRE(rep.first_nonpositive_degree.has_value());
                CHECK(*rep.first_nonpositive_degree == vanishing_threshold(n, r));
            }
        }
    }
}

TEST_CASE("exact serialization") {
    PowerSeries s(2);
    s[0] = 1;
    s[1] = mpq_class(-3);
    s[2] = mpq_class(1, 2);
    auto strs = series_strings(s);
    CHECK(strs == std::vector<std::string>{"1", "-3", "1/2"});
    CHECK(from_ints({1, 2}).is_integral());
    CHECK_FALSE(s.is_integral());
    CHECK(s.extended(4).trunc() == 4);
    CHECK(s.extended(4)[4] == 0);
    CHECK(s.extended(1)[1] == -3);
}

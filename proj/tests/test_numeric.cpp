#include <doctest.h>

#include <random>

#include "hforge/combinatorics.hpp"
#include "hforge/errors.hpp"
#include "hforge/linear.hpp"
#include "hforge/profile.hpp"
#include "hforge/series.hpp"

using namespace hforge;

TEST_CASE("rationals are canonical") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(3, -6).get_den() > 0);
    CHECK(to_string(rat(3, -6)) == "-1/2");
    CHECK(to_string(rat(8, 4)) == "2");
    CHECK(parse_rational("7/5760") == rat(7, 5760));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic laws on random samples") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    auto random_rat = [&] { return rat(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rat(), b = random_rat(), c = random_rat();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        Rational s = a * b + c;
        CHECK(s.get_den() > 0);
        CHECK(gcd(s.get_num(), s.get_den()) == 1);
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(4) == 24);
    CHECK(factorial(6) == 720);
}

TEST_CASE("odd double factorial") {
    CHECK(odd_double_factorial(0) == 1);  // (-1)!!
    CHECK(odd_double_factorial(1) == 1);
    CHECK(odd_double_factorial(3) == 15);
    CHECK(odd_double_factorial(5) == 945);
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(2, {1, 2, 3}) == 11);
    CHECK(elementary_symmetric(0, {5, 7}) == 1);
    CHECK(elementary_symmetric(3, {1, 1, 1}) == 1);
}

TEST_CASE("newton cross-check for elementary symmetric") {
    // e_i(x_1..x_n) = e_i(x_1..x_{n-1}) + x_n e_{i-1}(x_1..x_{n-1})
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> val(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> xs(5);
        for (auto& x : xs) x = val(rng);
        std::vector<long> head(xs.begin(), xs.end() - 1);
        for (std::size_t i = 1; i <= xs.size(); ++i) {
            Integer lhs = elementary_symmetric(i, xs);
            Integer rhs = (i < xs.size() ? elementary_symmetric(i, head) : Integer(0)) +
                          xs.back() * elementary_symmetric(i - 1, head);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("profile derived quantities") {
    CHECK(aut_count(Profile({1, 1, 2})) == 2);
    CHECK(aut_count(Profile({2, 2, 2})) == 6);
    CHECK(aut_count(Profile({1, 2, 3})) == 1);
    CHECK(centralizer_order(Profile({1, 1, 1})) == 6);
    CHECK(centralizer_order(Profile({2})) == 2);
    CHECK(centralizer_order(Profile({2, 2})) == 8);
    CHECK(branch_point_count(0, Profile({1, 1, 1})) == 4);
    CHECK(branch_point_count(1, Profile({2})) == 3);
    CHECK(branch_point_count(2, Profile({3})) == 6);
    CHECK(Profile({3, 1, 2}).parts() == std::vector<long>{1, 2, 3});
    CHECK_THROWS_AS(Profile({0, 2}), std::invalid_argument);
}

TEST_CASE("sin kernel series") {
    TruncatedSeries k2 = series_sin_kernel(2, 4);
    CHECK(k2.coeff(0) == 1);
    CHECK(k2.coeff(2) == rat(1, 12));
    CHECK(k2.coeff(4) == rat(1, 240));
    CHECK(series_sin_kernel(1, 2).coeff(2) == rat(1, 24));
    CHECK(series_sin_kernel(3, 2).coeff(2) == rat(1, 8));
}

TEST_CASE("sinh kernel differs from sin kernel in the t^2 sign") {
    CHECK(series_sinh_kernel(2, 4).coeff(2) == -rat(1, 12));
}

TEST_CASE("series times reciprocal is one, randomized") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 6), lead(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries s(8);
        s.set_coeff(0, rat(lead(rng), den(rng)));
        for (long e = 2; e <= 8; e += 2) s.set_coeff(e, rat(num(rng), den(rng)));
        TruncatedSeries p = s * s.reciprocal();
        CHECK(p.coeff(0) == 1);
        for (long e = 2; e <= 8; e += 2) CHECK(p.coeff(e) == 0);
    }
}

namespace {

CorrelatorKey dummy_key(std::size_t index) {
    // distinct valid keys used purely as column labels
    return CorrelatorKey(0, {static_cast<long>(index), 0, 0, 0}, 0);
}

}  // namespace

TEST_CASE("solve_exact on the identity system") {
    LinearSystem sys;
    sys.columns = {dummy_key(0), dummy_key(1)};
    sys.rows = {{1, 0}, {0, 1}};
    sys.rhs = {rat(1, 2), rat(1, 3)};
    auto x = solve_exact(sys);
    CHECK(x.at(dummy_key(0)) == rat(1, 2));
    CHECK(x.at(dummy_key(1)) == rat(1, 3));
}

TEST_CASE("solve_exact on the genus-2 inversion system") {
    LinearSystem sys;
    sys.columns = {dummy_key(0), dummy_key(1), dummy_key(2)};
    sys.rows = {{1, -1, 1}, {16, -8, 4}, {81, -27, 9}};
    sys.rhs = {0, rat(1, 480), rat(1, 40)};
    auto x = solve_exact(sys);
    CHECK(x.at(dummy_key(0)) == rat(1, 1152));
    CHECK(x.at(dummy_key(1)) == rat(1, 480));
    CHECK(x.at(dummy_key(2)) == rat(7, 5760));
}

TEST_CASE("solve_exact detects rank deficiency and inconsistency") {
    LinearSystem singular;
    singular.columns = {dummy_key(0), dummy_key(1)};
    singular.rows = {{1, 1}, {2, 2}};
    singular.rhs = {1, 2};
    CHECK_THROWS_AS(solve_exact(singular), RankDeficientError);

    LinearSystem inconsistent;
    inconsistent.columns = {dummy_key(0)};
    inconsistent.rows = {{1}, {1}};
    inconsistent.rhs = {1, 2};
    CHECK_THROWS_AS(solve_exact(inconsistent), InconsistentError);
}

TEST_CASE("solve then apply reproduces the right-hand side") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> entry(-9, 9), den(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4;
        LinearSystem sys;
        for (std::size_t c = 0; c < n; ++c) sys.columns.push_back(dummy_key(c));
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c) row.push_back(rat(entry(rng), den(rng)));
            sys.rows.push_back(row);
            sys.rhs.push_back(rat(entry(rng), den(rng)));
        }
        try {
            auto x = solve_exact(sys);
            for (std::size_t r = 0; r < n; ++r) {
                Rational acc = 0;
                for (std::size_t c = 0; c < n; ++c) acc += sys.rows[r][c] * x.at(sys.columns[c]);
                CHECK(acc == sys.rhs[r]);
            }
        } catch (const RankDeficientError&) {
            // a random matrix may be singular; nothing to verify then
        }
    }
}

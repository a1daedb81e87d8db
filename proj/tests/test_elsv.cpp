#include <doctest.h>

#include "hforge/combinatorics.hpp"
#include "hforge/elsv.hpp"
#include "hforge/extractor.hpp"
#include "hforge/oracle.hpp"

using namespace hforge;

TEST_CASE("elsv integral factor") {
    IntersectionEngine engine;
    CorrelatorTable empty;
    // g = 0, n >= 3: the factor is K^{n-3}
    for (const std::vector<long>& parts :
         {std::vector<long>{1, 1, 1}, {1, 2, 3}, {2, 2, 1, 1}, {1, 1, 1, 1, 2}}) {
        Profile p(parts);
        long n = static_cast<long>(p.n());
        CHECK(elsv_integral_factor(0, p, engine, empty) == pow(rat(p.degree(), 1), n - 3));
    }
    // formal K^{n-3} for n <= 2
    CHECK(elsv_integral_factor(0, Profile({2}), engine, empty) == rat(1, 4));
    CHECK(elsv_integral_factor(1, Profile({2}), engine, empty) == rat(1, 24));
    CHECK(elsv_integral_factor(1, Profile({1}), engine, empty) == 0);
}

TEST_CASE("hurwitz_elsv matches the closed formulas and the oracle") {
    IntersectionEngine engine;
    CorrelatorTable empty;
    CHECK(hurwitz_elsv(1, Profile({2}), engine, empty) == rat(1, 2));
    CHECK(hurwitz_elsv(0, Profile({1, 1, 1}), engine, empty) == 4);
    CHECK(hurwitz_elsv(0, Profile({1, 1, 1}), engine, empty) ==
          hurwitz_oracle(0, Profile({1, 1, 1})));
    ExtractionPlan plan{2, 1, {Profile({1}), Profile({2}), Profile({3})}};
    CorrelatorTable table = extract(plan);
    CHECK(hurwitz_elsv(2, Profile({3}), engine, table) == 81);
}

TEST_CASE("genus-0 closed formula") {
    CHECK(hurwitz_genus0_closed(Profile({1, 1, 1})) == 4);
    CHECK(hurwitz_genus0_closed(Profile({2})) == rat(1, 2));
    CHECK(hurwitz_genus0_closed(Profile({2, 2})) == 12);
    CHECK(hurwitz_oracle(0, Profile({2, 2})) == 12);
}

TEST_CASE("genus-1 closed formula") {
    CHECK(hurwitz_genus1_closed(Profile({2})) == rat(1, 2));
    CHECK(hurwitz_genus1_closed(Profile({1, 1})) == rat(1, 2));
    CHECK(hurwitz_genus1_closed(Profile({1})) == 0);
}

TEST_CASE("alpha coefficients") {
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(genus1_alpha_coefficient(std::vector<long>(n, 1)) ==
              rat(factorial(static_cast<long>(n) - 1), 24));
    CHECK(genus1_alpha_coefficient({1}) == rat(1, 24));
    CHECK(genus1_alpha_coefficient({0, 2}) == rat(1, 24));
}

TEST_CASE("alpha string recurrence") {
    // Both sides are coefficients of degree-n homogeneous polynomials, so the
    // identity is only meaningful on the dimension gate sum m_j = n.
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& rest : multisets_of(static_cast<long>(n), n - 1)) {
                std::vector<long> with_zero = rest;
                with_zero.insert(with_zero.begin(), 0);
                Rational rhs = 0;
                for (std::size_t j = 0; j < rest.size(); ++j) {
                    if (rest[j] == 0) continue;
                    auto reduced = rest;
                    --reduced[j];
                    rhs += genus1_alpha_coefficient(reduced);
                }
                CHECK(genus1_alpha_coefficient(with_zero) == rhs);
            }
}

TEST_CASE("one-point series against both kernels") {
    IntersectionEngine engine;
    ExtractionPlan plan{2, 1, {}};
    CorrelatorTable table = extract(plan);
    for (long k = 1; k <= 3; ++k) {
        TruncatedSeries lhs = one_point_series_lhs(k, 2, engine, table);
        CHECK(lhs == series_sin_kernel(k + 1, 4));
        CHECK(lhs != series_sinh_kernel(k + 1, 4));
    }
    CHECK(one_point_series_lhs(1, 2, engine, table).coeff(2) == rat(1, 12));
    CHECK(one_point_series_lhs(1, 2, engine, table).coeff(4) == rat(1, 240));
    CHECK(one_point_series_lhs(2, 1, engine, table).coeff(2) == rat(1, 8));
}

TEST_CASE("degree window and lowest degree checks") {
    ExtractionPlan plan1{1, 1, {}};
    ExtractionPlan plan2{2, 1, {}};
    CorrelatorTable t1 = extract(plan1);
    CorrelatorTable t2 = extract(plan2);
    CHECK(degree_window_check(1, 1, t1));
    CHECK(lowest_degree_check(1, 1, t1));
    CHECK(degree_window_check(2, 1, t2));
    CHECK(lowest_degree_check(2, 1, t2));

    CorrelatorTable bad;
    bad.insert(CorrelatorKey(2, {1}, 1), rat(1, 7), Provenance::Extracted);  // degree 1 < 2g+n-3
    CHECK_FALSE(degree_window_check(2, 1, bad));
}

TEST_CASE("k = 1 alternating vanishing") {
    IntersectionEngine engine;
    ExtractionPlan plan{2, 1, {}};
    CorrelatorTable table = extract(plan);
    for (long g = 1; g <= 2; ++g) {
        Rational sum = 0;
        for (long j = 0; j <= g; ++j) {
            Rational v = engine.hodge_integral(CorrelatorKey(g, {3 * g - 2 - j}, j), table);
            sum += (j % 2 == 0) ? v : -v;
        }
        CHECK(sum == 0);
    }
}

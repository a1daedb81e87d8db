#include <doctest.h>

#include <random>

#include "hforge/combinatorics.hpp"
#include "hforge/errors.hpp"
#include "hforge/intersection.hpp"

using namespace hforge;

TEST_CASE("correlator keys are canonical and gated") {
    CorrelatorKey key(1, {3, 0, 1}, 0);
    CHECK(key.exponents == std::vector<long>{0, 1, 3});
    CHECK_THROWS_AS(CorrelatorKey(0, {0}, 0), UnstableKeyError);
    CHECK_THROWS_AS(CorrelatorKey(1, {1}, 2), UnstableKeyError);
    CHECK(CorrelatorKey(0, {0, 0, 0}, 0).dimension_ok());
    CHECK_FALSE(CorrelatorKey(0, {2, 0, 0}, 0).dimension_ok());
}

TEST_CASE("genus-0 closed form") {
    CHECK(psi_genus0({0, 0, 0}) == 1);
    CHECK(psi_genus0({1, 0, 0, 0}) == 1);
    CHECK(psi_genus0({1, 1, 0, 0, 0}) == 2);
    CHECK(psi_genus0({2, 0, 0}) == 0);
    CHECK_THROWS_AS(psi_genus0({0, 0}), UnstableKeyError);
}

TEST_CASE("string_step") {
    auto terms = string_step(CorrelatorKey(1, {0, 2}, 0));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].first == CorrelatorKey(1, {1}, 0));
    CHECK(terms[0].second == 1);

    auto dropped = string_step(CorrelatorKey(1, {0, 0, 3}, 0));
    REQUIRE(dropped.size() == 1);
    CHECK(dropped[0].first == CorrelatorKey(1, {0, 2}, 0));

    CHECK_THROWS_AS(string_step(CorrelatorKey(1, {1, 2}, 0)), NotApplicableError);
}

TEST_CASE("dilaton_step") {
    auto [key, coeff] = dilaton_step(CorrelatorKey(1, {1, 1}, 0));
    CHECK(key == CorrelatorKey(1, {1}, 0));
    CHECK(coeff == 1);

    auto [key0, coeff0] = dilaton_step(CorrelatorKey(0, {1, 0, 0, 0}, 0));
    CHECK(key0 == CorrelatorKey(0, {0, 0, 0}, 0));
    CHECK(coeff0 == 1);

    CHECK_THROWS_AS(dilaton_step(CorrelatorKey(1, {1}, 0)), NotApplicableError);
}

TEST_CASE("psi_intersection reference values") {
    IntersectionEngine engine;
    CHECK(engine.psi_intersection(1, {1}) == rat(1, 24));
    CHECK(engine.psi_intersection(1, {0, 0, 3}) == rat(1, 24));
    CHECK(engine.psi_intersection(2, {4}) == rat(1, 1152));
    CHECK(engine.psi_intersection(0, {1, 1, 1}) == 0);
    CHECK(engine.psi_intersection(1, {1, 1}) == rat(1, 24));
}

TEST_CASE("dilaton consistency on computed values") {
    IntersectionEngine engine;
    // <tau_1 tau_4>_2 = (2*2 - 2 + 1) <tau_4>_2
    CHECK(engine.psi_intersection(2, {1, 4}) == rat(3, 1) * engine.psi_intersection(2, {4}));
    // string: <tau_0 tau_5>_2 = <tau_4>_2
    CHECK(engine.psi_intersection(2, {0, 5}) == engine.psi_intersection(2, {4}));
}

TEST_CASE("genus-0 recursion agreement up to n = 8") {
    IntersectionEngine engine;
    for (std::size_t n = 3; n <= 8; ++n)
        for (const auto& m : multisets_of(static_cast<long>(n) - 3, n))
            CHECK(engine.psi_intersection(0, m) == psi_genus0(m));
}

TEST_CASE("symmetry: unsorted queries agree with sorted ones") {
    IntersectionEngine engine;
    std::mt19937 rng(3);
    std::vector<long> m = {0, 0, 1, 2, 4};  // sums to 7 = 3g-3+n for g=2, n=5
    Rational reference = engine.psi_intersection(2, m);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(m.begin(), m.end(), rng);
        CHECK(engine.psi_intersection(2, m) == reference);
    }
}

TEST_CASE("lambda_g_value") {
    CHECK(lambda_g_value(1, {0}, rat(1, 24)) == rat(1, 24));
    CHECK(lambda_g_value(1, {0, 1}, rat(1, 24)) == rat(1, 24));
    CHECK(lambda_g_value(2, {2}, rat(7, 5760)) == rat(7, 5760));
    CHECK(lambda_g_value(2, {1}, rat(7, 5760)) == 0);  // dimension mismatch
}

TEST_CASE("hodge_integral dispatch") {
    IntersectionEngine engine;
    CorrelatorTable extracted;
    CHECK(engine.hodge_integral(CorrelatorKey(0, {0, 0, 0}, 0), extracted) == 1);
    CHECK(engine.hodge_integral(CorrelatorKey(1, {0, 1}, 1), extracted) == rat(1, 24));
    CHECK_THROWS_AS(engine.hodge_integral(CorrelatorKey(2, {3}, 1), extracted),
                    MissingTableEntryError);
    extracted.insert(CorrelatorKey(2, {3}, 1), rat(1, 480), Provenance::Extracted);
    CHECK(engine.hodge_integral(CorrelatorKey(2, {3}, 1), extracted) == rat(1, 480));
}

TEST_CASE("string consistency across the memo table") {
    IntersectionEngine engine;
    engine.psi_intersection(2, {0, 0, 1, 2, 4});  // populate
    for (const auto& [key, entry] : engine.memo().entries()) {
        if (std::find(key.exponents.begin(), key.exponents.end(), 0L) == key.exponents.end())
            continue;
        if (!stable(key.genus, key.n() - 1)) continue;
        Rational sum = 0;
        for (const auto& [reduced, coeff] : string_step(key))
            sum += coeff * engine.psi_intersection(reduced.genus, reduced.exponents);
        CHECK(sum == entry.value);
    }
}

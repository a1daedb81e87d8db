#include <doctest.h>

#include "hforge/combinatorics.hpp"
#include "hforge/errors.hpp"
#include "hforge/oracle.hpp"

using namespace hforge;

TEST_CASE("cycle_type") {
    CHECK(cycle_type(Permutation({1, 0, 2})).parts() == std::vector<long>{1, 2});
    CHECK(cycle_type(Permutation::identity(3)).parts() == std::vector<long>{1, 1, 1});
    CHECK(cycle_type(Permutation({1, 2, 0})).parts() == std::vector<long>{3});
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("canonical cycle representative") {
    Permutation sigma = Permutation::from_cycle_type(Profile({2, 3}));
    CHECK(cycle_type(sigma).parts() == std::vector<long>{2, 3});
    CHECK(sigma.then(sigma.inverse()).is_identity());
}

TEST_CASE("count_factorizations base examples") {
    // sigma = (12) in S_2, r = 3
    CHECK(count_factorizations({Permutation::from_cycle_type(Profile({2})), 3, true}) == 1);
    // sigma = id in S_3, r = 4: 27 tuples with product id, 3 intransitive
    CHECK(count_factorizations({Permutation::identity(3), 4, true}) == 24);
    CHECK(count_factorizations({Permutation::identity(3), 4, false}) == 27);
    // 3-cycle in S_3
    CHECK(count_factorizations({Permutation::from_cycle_type(Profile({3})), 2, true}) == 3);
    CHECK(count_factorizations({Permutation::from_cycle_type(Profile({3})), 6, true}) == 243);
}

TEST_CASE("frobenius route matches the examples") {
    CHECK(count_factorizations_frobenius({Permutation::from_cycle_type(Profile({3})), 6, true}) ==
          243);
    CHECK(count_factorizations_frobenius({Permutation::identity(3), 4, true}) == 24);
    CHECK(count_factorizations_frobenius({Permutation::from_cycle_type(Profile({2})), 1, true}) ==
          1);
}

TEST_CASE("dfs equals frobenius over all small cycle types") {
    for (long K = 1; K <= 4; ++K)
        for (const auto& type : partitions_of(K))
            for (long r = 0; r <= 5; ++r) {
                FactorizationQuery q{Permutation::from_cycle_type(Profile(type)), r, true};
                CHECK(count_factorizations(q) == count_factorizations_frobenius(q));
                FactorizationQuery all = q;
                all.transitive_only = false;
                CHECK(count_factorizations(all) == count_factorizations_frobenius(all));
            }
}

TEST_CASE("parity: odd/even mismatch gives zero") {
    // sigma even (3-cycle) cannot be a product of an odd number of transpositions
    CHECK(count_factorizations({Permutation::from_cycle_type(Profile({3})), 3, false}) == 0);
    CHECK(count_factorizations_frobenius(
              {Permutation::from_cycle_type(Profile({3})), 3, false}) == 0);
}

TEST_CASE("node budget is enforced") {
    OracleOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS(
        count_factorizations({Permutation::identity(4), 6, true}, tiny), SearchTooLargeError);
}

TEST_CASE("thread fan-out does not change the count") {
    FactorizationQuery q{Permutation::identity(4), 6, true};
    Integer serial = count_factorizations(q);
    OracleOptions opts;
    for (unsigned t : {2u, 3u, 5u}) {
        opts.threads = t;
        CHECK(count_factorizations(q, opts) == serial);
    }
}

TEST_CASE("hurwitz_oracle reference values") {
    CHECK(hurwitz_oracle(0, Profile({1, 1, 1})) == 4);
    CHECK(hurwitz_oracle(1, Profile({2})) == rat(1, 2));
    CHECK(hurwitz_oracle(1, Profile({1, 1})) == rat(1, 2));
    CHECK(hurwitz_oracle(2, Profile({3})) == 81);
    CHECK(hurwitz_oracle(0, Profile({2})) == rat(1, 2));
    CHECK(hurwitz_oracle(0, Profile({2}), OracleMethod::Dfs) == rat(1, 2));
}

TEST_CASE("degree-1 covers exist only in genus 0") {
    CHECK(hurwitz_oracle(0, Profile({1})) == 1);
    CHECK(hurwitz_oracle(1, Profile({1})) == 0);
    CHECK(hurwitz_oracle(2, Profile({1})) == 0);
}

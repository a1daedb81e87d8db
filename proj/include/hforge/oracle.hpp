#pragma once

#include <cstdint>

#include "hforge/permutation.hpp"
#include "hforge/profile.hpp"
#include "hforge/rational.hpp"

namespace hforge {

struct FactorizationQuery {
    Permutation sigma;
    long factor_count = 0;  // number of transposition factors
    bool transitive_only = true;
};

struct OracleOptions {
    std::uint64_t node_budget = 1'000'000'000;
    unsigned threads = 1;
};

// Number of ordered tuples (tau_1,...,tau_r) of transpositions in S_K with
// tau_r ... tau_1 = sigma, restricted to tuples generating a transitive
// subgroup when transitive_only. Depth-first enumeration; throws
// SearchTooLargeError when the node budget is exceeded.
Integer count_factorizations(const FactorizationQuery& query,
                             const OracleOptions& options = {});

// Same value via the Frobenius character sum, with transitivity imposed by
// inclusion-exclusion over set partitions of sigma's cycles.
Integer count_factorizations_frobenius(const FactorizationQuery& query);

enum class OracleMethod { Auto, Dfs, Frobenius };

// Hurwitz number h_{g;k} = A / |centralizer(sigma)| with r = mu(g, profile)
// branch points. Auto uses the character sum.
Rational hurwitz_oracle(long genus, const Profile& profile,
                        OracleMethod method = OracleMethod::Auto,
                        const OracleOptions& options = {});

}  // namespace hforge

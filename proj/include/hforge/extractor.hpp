#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hforge/elsv.hpp"
#include "hforge/linear.hpp"
#include "hforge/oracle.hpp"

namespace hforge {

// Plan for recovering the Hodge integrals <tau_m lambda_i>_g of a fixed
// (g, n) slice by evaluating the main formula at probe profiles and
// solving the resulting exact linear system.
struct ExtractionPlan {
    long genus = 0;
    std::size_t n = 1;
    std::vector<Profile> probes;

    // All unknowns of the slice: i in 0..g, sorted n-multisets m with
    // sum m = 3g - 3 + n - i; ordered by ascending i, then lexicographically.
    std::vector<CorrelatorKey> unknowns() const;
};

// Probe profiles of length n in graded lexicographic order: (1,..,1) first,
// then increasing degree.
std::vector<Profile> default_probes(std::size_t n, std::size_t count, std::size_t skip = 0);

// One row per probe; coefficient of unknown (m,i) is
// (-1)^i sum_{ordered rearrangements} prod k_j^{m_j}; right-hand side is
// h_oracle * #Aut / (mu! * prod k^k/k!).
LinearSystem build_system(const ExtractionPlan& plan, OracleMethod method = OracleMethod::Auto,
                          const OracleOptions& options = {});

// Solves the plan's system; on rank deficiency extends the probe list in
// graded order and retries, up to a bound. The plan is updated with the
// probes actually used.
CorrelatorTable extract(ExtractionPlan& plan, OracleMethod method = OracleMethod::Auto,
                        const OracleOptions& options = {});

struct HoldoutResult {
    Profile probe;
    Rational oracle_value;
    Rational elsv_value;
    bool equal() const { return oracle_value == elsv_value; }
};

struct HoldoutReport {
    std::vector<HoldoutResult> results;
    bool all_equal() const;
};

// Compares oracle Hurwitz numbers with ELSV evaluations that use the
// extracted table, on probes disjoint from the plan.
HoldoutReport holdout_validate(const ExtractionPlan& plan, const CorrelatorTable& table,
                               const std::vector<Profile>& extra_probes,
                               OracleMethod method = OracleMethod::Auto,
                               const OracleOptions& options = {});

}  // namespace hforge

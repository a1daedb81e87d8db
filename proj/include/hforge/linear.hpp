#pragma once

#include <map>
#include <vector>

#include "hforge/correlator.hpp"
#include "hforge/rational.hpp"

namespace hforge {

// Dense exact linear system A x = b with columns labeled by correlator keys.
struct LinearSystem {
    std::vector<CorrelatorKey> columns;
    std::vector<std::vector<Rational>> rows;  // each of size columns.size()
    std::vector<Rational> rhs;                // one per row
};

// Unique exact solution by Gaussian elimination over the rationals with the
// first-nonzero pivot rule. Throws RankDeficientError when the columns are
// not independent, InconsistentError when no solution exists.
std::map<CorrelatorKey, Rational> solve_exact(const LinearSystem& system);

}  // namespace hforge

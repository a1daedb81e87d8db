#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hforge/rational.hpp"

namespace hforge {

// Irreducible character values of symmetric groups by the
// Murnaghan-Nakayama rule. Partitions are vectors sorted descending.
class CharacterCalculator {
public:
    // chi_lambda evaluated on the class of cycle type mu; |lambda| == |mu|.
    Integer chi(const std::vector<long>& lambda, const std::vector<long>& mu);

    // chi_lambda(1^n), the dimension of the irreducible.
    Integer dimension(const std::vector<long>& lambda);

private:
    std::map<std::pair<std::vector<long>, std::vector<long>>, Integer> memo_;
};

// Size of the conjugacy class of cycle type mu in S_{|mu|}: n! / z_mu.
Integer conjugacy_class_size(const std::vector<long>& mu);

}  // namespace hforge

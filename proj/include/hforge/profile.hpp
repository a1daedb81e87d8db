#pragma once

#include <vector>

#include "hforge/rational.hpp"

namespace hforge {

// Pole-order tuple (k_1,...,k_n), stored sorted ascending. All formulas are
// symmetric in the parts, so the canonical order is just for reproducibility.
class Profile {
public:
    explicit Profile(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    std::size_t n() const { return parts_.size(); }
    long degree() const { return degree_; }  // K = sum of parts

    bool operator==(const Profile&) const = default;

private:
    std::vector<long> parts_;
    long degree_ = 0;
};

// mu = K + n + 2g - 2, the number of finite simple branch points.
long branch_point_count(long genus, const Profile& p);

// prod m_j! over multiplicities of repeated part values.
Integer aut_count(const Profile& p);

// prod k_i * prod m_j!, the centralizer order in S_K of a permutation with
// this cycle type.
Integer centralizer_order(const Profile& p);

// prod k_i^{k_i} / k_i!, the ELSV combinatorial prefactor.
Rational elsv_prefactor(const Profile& p);

std::string to_string(const Profile& p);

}  // namespace hforge

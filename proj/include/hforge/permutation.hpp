#pragma once

#include <vector>

#include "hforge/profile.hpp"

namespace hforge {

// Bijection on {0,...,K-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int k);

    // Canonical representative of a cycle type: consecutive blocks,
    // (0 1 ... k_1-1)(k_1 ... k_1+k_2-1)...
    static Permutation from_cycle_type(const Profile& type);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation then(const Permutation& second) const;  // second o this
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

Profile cycle_type(const Permutation& p);

}  // namespace hforge

#include "hforge/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycle_type(const Profile& type) {
    std::vector<int> im(type.degree());
    int base = 0;
    for (long k : type.parts()) {
        for (long j = 0; j < k; ++j) im[base + j] = base + static_cast<int>((j + 1) % k);
        base += static_cast<int>(k);
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& second) const {
    if (second.size() != size()) throw std::invalid_argument("size mismatch");
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[i] = second.images_[images_[i]];
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

Profile cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<long> lengths;
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Profile(std::move(lengths));
}

}  // namespace hforge

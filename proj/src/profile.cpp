#include "hforge/profile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hforge/combinatorics.hpp"

namespace hforge {

Profile::Profile(std::vector<long> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("profile must have at least one part");
    for (long k : parts_)
        if (k < 1) throw std::invalid_argument("profile parts must be positive");
    std::sort(parts_.begin(), parts_.end());
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long branch_point_count(long genus, const Profile& p) {
    if (genus < 0) throw std::invalid_argument("negative genus");
    long mu = p.degree() + static_cast<long>(p.n()) + 2 * genus - 2;
    if (mu < 0) throw std::invalid_argument("no covering space: mu < 0");
    return mu;
}

Integer aut_count(const Profile& p) {
    Integer r = 1;
    long run = 1;
    for (std::size_t i = 1; i <= p.n(); ++i) {
        if (i < p.n() && p.parts()[i] == p.parts()[i - 1]) {
            ++run;
        } else {
            r *= factorial(run);
            run = 1;
        }
    }
    return r;
}

Integer centralizer_order(const Profile& p) {
    Integer r = aut_count(p);
    for (long k : p.parts()) r *= k;
    return r;
}

Rational elsv_prefactor(const Profile& p) {
    Rational r = 1;
    for (long k : p.parts())
        r *= rat(pow(Integer(k), static_cast<unsigned long>(k)), factorial(k));
    return r;
}

std::string to_string(const Profile& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

}  // namespace hforge

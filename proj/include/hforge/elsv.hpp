#pragma once

#include "hforge/intersection.hpp"
#include "hforge/profile.hpp"
#include "hforge/series.hpp"

namespace hforge {

// The Hodge-integral factor of the main formula:
//   sum_{i=0}^{g} (-1)^i sum_{ordered m, sum m = 3g-3+n-i}
//       <tau_{sort(m)} lambda_i>_g prod_j k_j^{m_j},
// with the formal value K^{n-3} for g = 0, n <= 2.
Rational elsv_integral_factor(long genus, const Profile& profile, IntersectionEngine& engine,
                              const CorrelatorTable& extracted);

// h_{g;k} = mu!/#Aut * prod k_i^{k_i}/k_i! * integral factor.
Rational hurwitz_elsv(long genus, const Profile& profile, IntersectionEngine& engine,
                      const CorrelatorTable& extracted);

// Hurwitz's genus-0 closed formula, total on all profiles via the formal
// K^{n-3}.
Rational hurwitz_genus0_closed(const Profile& profile);

// The genus-1 closed formula
//   (K+n)!/(24 #Aut) * prod k_i^{k_i}/k_i!
//       * (K^n - sum_{i=2}^n (i-2)! e_i K^{n-i} - K^{n-1}).
Rational hurwitz_genus1_closed(const Profile& profile);

// alpha_{m_1,...,m_n} = (n! - sum_{i=2}^n (i-2)!(n-i)! e_i(m)) / (24 prod m_j!),
// the coefficient extracted in the genus-1 closed-formula proof.
Rational genus1_alpha_coefficient(const std::vector<long>& exponents);

// 1 + sum_g t^{2g} sum_{i=0}^g k^i <psi^{2g-2+i} lambda_{g-i}>_{g,1}:
// the linear-Hodge one-point generating series.
TruncatedSeries one_point_series_lhs(long k, long max_genus, IntersectionEngine& engine,
                                     const CorrelatorTable& extracted);

// True iff every nonzero entry of the (g,n) slice of the table has degree
// sum m in [n+2g-3-? ...]; concretely exponent degree within
// [2g+n-3, 3g+n-3] (equivalently lambda index within 0..g with the
// dimension gate).
bool degree_window_check(long genus, std::size_t n, const CorrelatorTable& table);

// True iff the i = g block of the (g,n) slice equals
// b_g * multinomial(2g+n-3; m) for a single constant b_g.
bool lowest_degree_check(long genus, std::size_t n, const CorrelatorTable& table);

}  // namespace hforge

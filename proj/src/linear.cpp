#include "hforge/linear.hpp"

#include <stdexcept>

#include "hforge/errors.hpp"

namespace hforge {

std::map<CorrelatorKey, Rational> solve_exact(const LinearSystem& system) {
    const std::size_t ncols = system.columns.size();
    const std::size_t nrows = system.rows.size();
    if (nrows < ncols) throw RankDeficientError("fewer rows than unknowns");
    if (system.rhs.size() != nrows) throw std::invalid_argument("rhs size mismatch");
    for (const auto& row : system.rows)
        if (row.size() != ncols) throw std::invalid_argument("row size mismatch");

    auto a = system.rows;
    auto b = system.rhs;

    std::vector<std::size_t> pivot_row(ncols);
    std::size_t next = 0;
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t p = next;
        while (p < nrows && a[p][col] == 0) ++p;
        if (p == nrows) throw RankDeficientError("no pivot in column " + std::to_string(col));
        std::swap(a[p], a[next]);
        std::swap(b[p], b[next]);
        for (std::size_t r = next + 1; r < nrows; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[next][col];
            for (std::size_t c = col; c < ncols; ++c) a[r][c] -= f * a[next][c];
            b[r] -= f * b[next];
        }
        pivot_row[col] = next;
        ++next;
    }
    // Surplus rows must have been reduced to 0 = 0.
    for (std::size_t r = next; r < nrows; ++r)
        if (b[r] != 0) throw InconsistentError("inconsistent system (surplus row)");

    std::vector<Rational> x(ncols);
    for (std::size_t col = ncols; col-- > 0;) {
        std::size_t r = pivot_row[col];
        Rational acc = b[r];
        for (std::size_t c = col + 1; c < ncols; ++c) acc -= a[r][c] * x[c];
        x[col] = acc / a[r][col];
    }

    std::map<CorrelatorKey, Rational> out;
    for (std::size_t col = 0; col < ncols; ++col) out.emplace(system.columns[col], x[col]);
    return out;
}

}  // namespace hforge

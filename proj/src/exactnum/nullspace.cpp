#include "goldbase/exactnum/nullspace.hpp"

#include <cstddef>

namespace goldbase::exactnum {

std::vector<QuadVector> quad_nullspace(const QuadMatrix& m) {
    if (m.empty()) return {};
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();

    QuadMatrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        QuadRat inv = a[rank][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            QuadRat factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= factor * a[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<QuadVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QuadVector v(cols, QuadRat(0));
        v[f] = QuadRat(1);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace goldbase::exactnum

#include "cremona/detail/linalg.hpp"

namespace cremona::detail {

std::vector<std::vector<Scalar>> nullspace(SMatrix a, std::size_t ncols) {
    std::vector<int> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Scalar inv = a[row][c].inverse();
        for (std::size_t j = c; j < ncols; ++j) a[row][j] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!a[row][j].is_zero()) a[r][j] -= f * a[row][j];
        }
        pivcol.push_back(int(c));
        ++row;
    }
    std::vector<bool> is_piv(ncols, false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> v(ncols, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(SMatrix a) {
    std::size_t n = a.size();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Scalar inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar f = a[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace cremona::detail

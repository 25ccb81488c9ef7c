#include "theta/matrix.hpp"

#include <stdexcept>

namespace theta {

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    RationalMatrix r(n, std::vector<Rational>(p, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Rational s(0);
            for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

RationalMatrix mat_transpose(const RationalMatrix& a) {
    const std::size_t n = a.size(), p = a.empty() ? 0 : a[0].size();
    RationalMatrix r(p, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) r[j][i] = a[i][j];
    return r;
}

Rational mat_det(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

RationalMatrix mat_inverse(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix work = a;
    RationalMatrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("mat_inverse: singular matrix");
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        Rational d = work[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work[row][col] == 0) continue;
            Rational f = work[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[row][j] -= f * work[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational mat_trace(const RationalMatrix& a) {
    Rational t(0);
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

std::size_t mat_rank(RationalMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t row = rank + 1; row < rows; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j) a[row][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace theta

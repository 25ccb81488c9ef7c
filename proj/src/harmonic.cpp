#include "theta/harmonic.hpp"

#include <stdexcept>

namespace theta {

SymMatrix::SymMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    for (const auto& row : entries_)
        if (row.size() != n) throw NotSymmetric("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries_[i][j] != entries_[j][i])
                throw NotSymmetric("tangent direction is not symmetric");
}

Rational SymMatrix::eval(const std::vector<long>& coords) const {
    const std::size_t n = dim();
    if (coords.size() != n) throw DimensionMismatch("SymMatrix::eval");
    Rational s(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (coords[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < n; ++j)
            if (coords[j] != 0) row += entries_[i][j] * Rational(coords[j]);
        s += Rational(coords[i]) * row;
    }
    return s;
}

SymMatrix SymMatrix::scaled(const Rational& c) const {
    RationalMatrix e = entries_;
    for (auto& row : e)
        for (auto& v : row) v *= c;
    return SymMatrix(std::move(e));
}

long harmonic_dim(long n) {
    if (n < 1) throw std::invalid_argument("harmonic_dim: n must be >= 1");
    return (n * n + n - 2) / 2;
}

Rational killing_pair(const GramMatrix& a, const SymMatrix& h1, const SymMatrix& h2) {
    const std::size_t n = a.dim();
    if (h1.dim() != n || h2.dim() != n) throw DimensionMismatch("killing_pair");
    RationalMatrix inv = a.inverse();
    RationalMatrix p = mat_mul(inv, mat_mul(h1.entries(), mat_mul(inv, h2.entries())));
    return Rational(2) * mat_trace(p);
}

namespace {

std::vector<Rational> flatten(const RationalMatrix& m) {
    std::vector<Rational> v;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) v.push_back(m[i][j]);
    return v;
}

}  // namespace

TangentBasis tangent_basis(const GramMatrix& a) {
    const std::size_t n = a.dim();
    const std::size_t m = static_cast<std::size_t>(harmonic_dim(static_cast<long>(n)));
    RationalMatrix inv = a.inverse();
    std::vector<SymMatrix> basis;
    RationalMatrix flat_rows;  // flattened basis, for the span test
    for (std::size_t i = 0; i < n && basis.size() < m; ++i) {
        for (std::size_t j = i; j < n && basis.size() < m; ++j) {
            RationalMatrix e(n, std::vector<Rational>(n, Rational(0)));
            e[i][j] = 1;
            e[j][i] = 1;
            // tr(A^-1 E) for the elementary matrix
            Rational tr = (i == j) ? inv[i][i] : Rational(2) * inv[i][j];
            // B = E - (tr(A^-1 E)/n) A  is exactly A-traceless
            Rational f = tr / Rational(static_cast<long>(n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) e[r][c] -= f * a.at(r, c);
            flat_rows.push_back(flatten(e));
            if (mat_rank(flat_rows) == flat_rows.size()) {
                basis.emplace_back(std::move(e));
            } else {
                flat_rows.pop_back();
            }
        }
    }
    if (basis.size() != m)
        throw std::logic_error("tangent_basis: unexpected rank deficiency");
    RationalMatrix gram(m, std::vector<Rational>(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j; k < m; ++k)
            gram[j][k] = gram[k][j] = killing_pair(a, basis[j], basis[k]);
    return TangentBasis{a, std::move(basis), std::move(gram)};
}

}  // namespace theta

#ifndef THETA_HARMONIC_HPP
#define THETA_HARMONIC_HPP

#include <vector>

#include "theta/lattice.hpp"
#include "theta/matrix.hpp"

namespace theta {

// Symmetric rational matrix: a tangent direction at a point of the cone
// of positive forms.
class SymMatrix {
public:
    explicit SymMatrix(RationalMatrix entries);

    std::size_t dim() const { return entries_.size(); }
    const RationalMatrix& entries() const { return entries_; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }

    // lambda^t B lambda.
    Rational eval(const std::vector<long>& coords) const;

    SymMatrix scaled(const Rational& c) const;
    bool operator==(const SymMatrix& o) const { return entries_ == o.entries_; }

private:
    RationalMatrix entries_;
};

// dim of the trace-zero tangent hyperplane: (n^2 + n - 2) / 2.
long harmonic_dim(long n);

// Killing pairing 2 tr(A^-1 H1 A^-1 H2).
Rational killing_pair(const GramMatrix& a, const SymMatrix& h1, const SymMatrix& h2);

// Ordered rational basis of {B symmetric : tr(A^-1 B) = 0} with its exact
// Killing Gram matrix. Construction: project each elementary symmetric
// matrix E_ij (lexicographic (i,j), i <= j) along A to kill the A-trace,
// keep the projections that extend the span. Deterministic, so golden
// tests are stable.
struct TangentBasis {
    GramMatrix base_form;
    std::vector<SymMatrix> vectors;
    RationalMatrix killing_gram;
};

TangentBasis tangent_basis(const GramMatrix& a);

}  // namespace theta

#endif

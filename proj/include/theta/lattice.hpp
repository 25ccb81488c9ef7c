#ifndef THETA_LATTICE_HPP
#define THETA_LATTICE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/matrix.hpp"
#include "theta/qseries.hpp"
#include "theta/rational.hpp"

namespace theta {

struct NotSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPositiveDefinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotUnimodular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Symmetric positive definite rational matrix; the quadratic form
// lambda -> lambda^t A lambda on Z^n. Positive definiteness is certified
// at construction by the exact leading-principal-minor test.
class GramMatrix {
public:
    // Validates symmetry and positive definiteness; throws NotSymmetric /
    // NotPositiveDefinite (the message names the failing minor).
    static GramMatrix validate(const RationalMatrix& entries);

    std::size_t dim() const { return entries_.size(); }
    const RationalMatrix& entries() const { return entries_; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }

    // lambda^t A lambda, exact.
    Rational norm_of(const std::vector<long>& coords) const;
    // lambda^t A mu, exact.
    Rational inner(const std::vector<long>& a, const std::vector<long>& b) const;

    Rational det() const;
    RationalMatrix inverse() const;

    bool operator==(const GramMatrix& o) const { return entries_ == o.entries_; }

private:
    explicit GramMatrix(RationalMatrix entries) : entries_(std::move(entries)) {}
    RationalMatrix entries_;
};

struct LatticeVector {
    std::vector<long> coords;
    Rational norm;  // coords^t A coords, cached at enumeration time
};

// Floating upper-triangular Q with Q^t Q ~ A. Used only to bound the
// integer search box; never for exact values.
std::vector<std::vector<double>> cholesky_float(const GramMatrix& a);

// All lambda in Z^n with lambda^t A lambda <= x, zero included, in
// lexicographic order on coords. Exact: every candidate from the floating
// box (widened by one unit per coordinate) is re-checked rationally.
std::vector<LatticeVector> enumerate_vectors(const GramMatrix& a, const Rational& x);

// T^t A T for integer T with det T = +-1.
GramMatrix transform(const GramMatrix& a, const std::vector<std::vector<long>>& t);

// Distinct nonzero norms <= x with multiplicities, ascending.
std::vector<std::pair<Rational, long>> length_spectrum(const GramMatrix& a,
                                                       const Rational& x);

// JSON format {"n": int, "gram": [["p/q",...],...]}.
GramMatrix parse_gram_json(const std::string& text);
std::string render_gram_json(const GramMatrix& a);

// Fast integer view of a Gram matrix: scaled[i][j] = den * A[i][j] is an
// exact int64. Lets hot loops evaluate forms in machine integers. Falls
// back (ok == false) when entries do not fit.
struct ScaledGram {
    bool ok = false;
    std::int64_t den = 1;
    std::vector<std::vector<std::int64_t>> num;
};
ScaledGram scale_to_int(const RationalMatrix& entries);

}  // namespace theta

#endif

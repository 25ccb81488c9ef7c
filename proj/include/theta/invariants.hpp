#ifndef THETA_INVARIANTS_HPP
#define THETA_INVARIANTS_HPP

#include <optional>

#include "theta/harmonic.hpp"
#include "theta/lattice.hpp"
#include "theta/qseries.hpp"

namespace theta {

// Theta series: sum over lattice vectors of norm <= x of q^norm.
QSeries theta_series(const GramMatrix& a, const Rational& x);

// Directional derivative of the theta map along B:
// sum of (lambda^t B lambda) q^(lambda^t A lambda).
QSeries dtheta(const GramMatrix& a, const SymMatrix& b, const Rational& x);

enum class Theta11Route { direct, harmonic };

struct Theta11Report {
    QSeries series;
    Theta11Route route;
    Rational bound;
};

// Pair-sum formula: the q^m coefficient is the sum over vector pairs with
// norm(g) + norm(d) = m of (g^t A d)^2 / 2 - norm(g) norm(d) / (2n).
Theta11Report theta11_direct(const GramMatrix& a, const Rational& x);

// Harmonic route, basis-free: sum_{j,k} (G^-1)[j][k] dtheta_j dtheta_k
// over the exact tangent basis with Killing Gram G. Equals the pair-sum
// route (conversion constant 1, pinned by the dual-route tests).
Theta11Report theta11_harmonic(const GramMatrix& a, const Rational& x);

struct WronskianResult {
    QSeries raw_det;            // Wronskian in the chosen rational basis
    Rational gram_det;          // det of the Killing Gram of that basis
    QSeries normalized_square;  // raw_det^2 / gram_det, basis independent
};

// m x m Wronskian of the tangent-direction theta series: row k applies
// (q d/dq)^k to each dtheta column, k = 0..m-1.
WronskianResult wronskian(const GramMatrix& a, const Rational& x);
WronskianResult wronskian(const TangentBasis& basis, const Rational& x);

// Weight of the normalized squared Wronskian for an integral lattice of
// rank n (metadata only; nothing here evaluates on the upper half plane).
long wronskian_weight(long n);

// Calibrated scalar on the squared Rankin-Cohen term of the direct-sum
// formula: the F1^2 coefficient is kappa / (n1 n2 (n1 + n2)) with
// F1(f,g) = (n1/2) f Dg - (n2/2) (Df) g and D = q d/dq. Fixed once
// against the pair-sum route on Z (+) 2Z and mixed-rank sums; see tests.
inline const long kRankinCohenSquareCalibration = 2;

// First Rankin-Cohen bracket of forms of weights n1/2 and n2/2.
QSeries rankin_cohen_f1(const QSeries& f, long n1, const QSeries& g, long n2);

// Direct-sum formula for theta11 from the summands' data:
// theta11_1 theta2^2 + theta11_2 theta1^2 + kappa/(n1 n2 (n1+n2)) F1^2.
QSeries theta11_direct_sum(const QSeries& theta1, const QSeries& theta11_1, long n1,
                           const QSeries& theta2, const QSeries& theta11_2, long n2);

// Block-diagonal Gram matrix of the orthogonal direct sum.
GramMatrix direct_sum(const GramMatrix& a1, const GramMatrix& a2);

struct InvariantComparison {
    bool theta_equal = false;
    bool theta11_equal = false;
    std::optional<Rational> theta_first_diff;
    std::optional<Rational> theta11_first_diff;
};

// Truncated equality of theta and theta11 at bound x. Throws
// DimensionMismatch on rank mismatch.
InvariantComparison compare_invariants(const GramMatrix& a1, const GramMatrix& a2,
                                       const Rational& x);

// Smallest exponent where f and g differ, up to the common bound.
std::optional<Rational> first_difference(const QSeries& f, const QSeries& g);

}  // namespace theta

#endif

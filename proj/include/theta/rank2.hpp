#ifndef THETA_RANK2_HPP
#define THETA_RANK2_HPP

#include <utility>
#include <vector>

#include "theta/invariants.hpp"
#include "theta/lattice.hpp"

namespace theta {

struct NoMatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Ambiguous : std::runtime_error {
    Ambiguous(std::string msg, std::vector<GramMatrix> candidates)
        : std::runtime_error(std::move(msg)), candidates(std::move(candidates)) {}
    std::vector<GramMatrix> candidates;
};

enum class Rank2Verdict { Vanishing, Degenerate, Nondegenerate };

struct Rank2Class {
    Rank2Verdict verdict;
    int degenerate_case = 0;  // 1, 2 or 3 when verdict == Degenerate
    GramMatrix reduced;
    std::vector<std::vector<long>> transform;  // T with T^t A T = reduced
    double tau_re = 0.0, tau_im = 0.0;         // display only; decisions are exact
};

// Gauss reduction to 0 <= 2b <= a <= c. Returns the reduced form and the
// unimodular change of basis.
std::pair<GramMatrix, std::vector<std::vector<long>>> reduce_rank2(const GramMatrix& a);

// Trichotomy on the reduced form: Vanishing for scalings of the Gaussian
// and Eisenstein forms, Degenerate(1) b = 0, Degenerate(2) 2b = a,
// Degenerate(3) a = c (smallest case index wins on overlaps), else
// Nondegenerate.
Rank2Class classify_rank2(const GramMatrix& a);

// The rank-2 Wronskian pair sum. `series` is the rational part; the full
// value carries an extra factor sqrt(det_a) from the Euclidean pair
// determinant, recorded here as det_a itself (only squares are decided).
struct DetDThetaRank2 {
    QSeries series;
    Rational det_a;
};
DetDThetaRank2 det_dtheta_rank2(const GramMatrix& a, const Rational& x);

// Minimal-vector data after scaling the form to minimal norm 1: the
// number of (lambda, -lambda) pairs of minimal vectors and the resulting
// q^2 coefficient of theta11 in the normalization where a lone pair
// yields 4. Checked against the pair-sum route (conversion constant 4).
struct MinimalVectorData {
    long pairs = 0;
    Rational c2;
    Rational theta11_q2;  // q^2 coefficient of theta11_direct, scaled form
};
MinimalVectorData minimal_vector_test(const GramMatrix& a);

// All reduced forms whose smallest distinct nonzero norms (with
// multiplicities) equal the given spectrum exactly.
std::vector<GramMatrix> gram_candidates_from_spectrum(
    const std::vector<std::pair<Rational, long>>& spectrum);

// Unique match or throws NoMatch / Ambiguous.
GramMatrix gram_from_spectrum(const std::vector<std::pair<Rational, long>>& spectrum);

}  // namespace theta

#endif

#ifndef THETA_QSERIES_HPP
#define THETA_QSERIES_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sparse exact q-expansion truncated at a rational exponent bound.
// Terms with exponent e carry 0 <= e <= bound and nonzero coefficient;
// anything the series would have beyond the bound is unknown, not zero.
class QSeries {
public:
    using TermMap = std::map<Rational, Rational>;

    explicit QSeries(Rational bound) : bound_(std::move(bound)) {}
    QSeries(TermMap terms, Rational bound);

    // The constant series c truncated at `bound`.
    static QSeries constant(const Rational& c, Rational bound);
    // A single term c * q^e.
    static QSeries monomial(const Rational& c, const Rational& e, Rational bound);

    const TermMap& terms() const { return terms_; }
    const Rational& bound() const { return bound_; }

    // Coefficient of q^e (zero when absent; e must be <= bound).
    Rational coeff(const Rational& e) const;

    bool is_zero() const { return terms_.empty(); }

    // Adds c * q^e in place, erasing the term if the sum cancels.
    // Terms beyond the bound are dropped silently.
    void add_term(const Rational& e, const Rational& c);

    bool operator==(const QSeries& other) const {
        return bound_ == other.bound_ && terms_ == other.terms_;
    }

private:
    TermMap terms_;
    Rational bound_;
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries mul(const QSeries& f, const QSeries& g);
QSeries scale(const Rational& c, const QSeries& f);
QSeries truncate(const QSeries& f, const Rational& bound);

// q d/dq: a_m q^m -> m a_m q^m. Realizes (1/2πi) d/dz on q-expansions.
QSeries qderiv(const QSeries& f);

// Determinant of a square matrix of series over the truncated ring,
// by Laplace expansion with minor caching. Entries are cut to the
// minimum bound first.
QSeries det_series(const std::vector<std::vector<QSeries>>& m);

// Canonical text format: "# bound=X" header, then one "EXPONENT\tCOEFF"
// line per term, ascending exponents, rationals in lowest terms.
std::string render_qseries(const QSeries& f);
QSeries parse_qseries(const std::string& text);

std::ostream& operator<<(std::ostream& os, const QSeries& f);

}  // namespace theta

#endif

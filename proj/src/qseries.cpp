#include "theta/qseries.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace theta {

QSeries::QSeries(TermMap terms, Rational bound) : bound_(std::move(bound)) {
    for (auto& [e, c] : terms) {
        if (sgn(e) < 0) throw std::invalid_argument("negative exponent in QSeries");
        if (c != 0 && e <= bound_) terms_.emplace(e, c);
    }
}

QSeries QSeries::constant(const Rational& c, Rational bound) {
    QSeries f(std::move(bound));
    f.add_term(0, c);
    return f;
}

QSeries QSeries::monomial(const Rational& c, const Rational& e, Rational bound) {
    QSeries f(std::move(bound));
    f.add_term(e, c);
    return f;
}

Rational QSeries::coeff(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSeries::add_term(const Rational& e, const Rational& c) {
    if (c == 0 || e > bound_) return;
    if (sgn(e) < 0) throw std::invalid_argument("negative exponent in QSeries");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSeries add(const QSeries& f, const QSeries& g) {
    QSeries r(std::min(f.bound(), g.bound()));
    for (const auto& [e, c] : f.terms()) r.add_term(e, c);
    for (const auto& [e, c] : g.terms()) r.add_term(e, c);
    return r;
}

QSeries sub(const QSeries& f, const QSeries& g) {
    QSeries r(std::min(f.bound(), g.bound()));
    for (const auto& [e, c] : f.terms()) r.add_term(e, c);
    for (const auto& [e, c] : g.terms()) r.add_term(e, -c);
    return r;
}

QSeries mul(const QSeries& f, const QSeries& g) {
    QSeries r(std::min(f.bound(), g.bound()));
    for (const auto& [ef, cf] : f.terms()) {
        if (ef > r.bound()) break;
        for (const auto& [eg, cg] : g.terms()) {
            Rational e = ef + eg;
            if (e > r.bound()) break;
            r.add_term(e, cf * cg);
        }
    }
    return r;
}

QSeries scale(const Rational& c, const QSeries& f) {
    QSeries r(f.bound());
    if (c == 0) return r;
    for (const auto& [e, a] : f.terms()) r.add_term(e, c * a);
    return r;
}

QSeries truncate(const QSeries& f, const Rational& bound) {
    QSeries r(bound);
    for (const auto& [e, c] : f.terms()) {
        if (e > bound) break;
        r.add_term(e, c);
    }
    return r;
}

QSeries qderiv(const QSeries& f) {
    QSeries r(f.bound());
    for (const auto& [e, c] : f.terms()) r.add_term(e, e * c);
    return r;
}

namespace {

// Laplace expansion along the first remaining row, memoized on the set of
// still-unused columns. Exponential in k but k stays small here.
QSeries det_rec(const std::vector<std::vector<QSeries>>& m, unsigned cols,
                std::unordered_map<unsigned, QSeries>& memo, const Rational& bound) {
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    const std::size_t k = m.size();
    std::size_t used = 0;
    for (std::size_t j = 0; j < k; ++j)
        if (!(cols & (1u << j))) ++used;
    const std::size_t row = used;
    QSeries det(bound);
    if (row == k) {
        det.add_term(0, 1);
    } else {
        int sign = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(cols & (1u << j))) continue;
            QSeries minor = det_rec(m, cols & ~(1u << j), memo, bound);
            QSeries contrib = mul(m[row][j], minor);
            det = (sign > 0) ? add(det, contrib) : sub(det, contrib);
            sign = -sign;
        }
    }
    memo.emplace(cols, det);
    return det;
}

}  // namespace

QSeries det_series(const std::vector<std::vector<QSeries>>& m) {
    const std::size_t k = m.size();
    if (k == 0) throw DimensionMismatch("det_series: empty matrix");
    if (k > 31) throw DimensionMismatch("det_series: matrix too large");
    Rational bound = m[0][0].bound();
    for (const auto& row : m) {
        if (row.size() != k) throw DimensionMismatch("det_series: matrix not square");
        for (const auto& entry : row) bound = std::min(bound, entry.bound());
    }
    std::unordered_map<unsigned, QSeries> memo;
    return det_rec(m, (1u << k) - 1u, memo, bound);
}

std::string render_qseries(const QSeries& f) {
    std::ostringstream os;
    os << "# bound=" << render_rational(f.bound()) << "\n";
    for (const auto& [e, c] : f.terms())
        os << render_rational(e) << "\t" << render_rational(c) << "\n";
    return os.str();
}

QSeries parse_qseries(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    bool have_bound = false;
    Rational bound;
    QSeries::TermMap terms;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# bound=", 0) == 0) {
            bound = parse_rational(line.substr(8));
            have_bound = true;
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("qseries line without tab: " + line);
        Rational e = parse_rational(line.substr(0, tab));
        Rational c = parse_rational(line.substr(tab + 1));
        if (!terms.emplace(e, c).second)
            throw ParseError("duplicate exponent: " + line.substr(0, tab));
    }
    if (!have_bound) throw ParseError("qseries text lacks '# bound=' header");
    return QSeries(std::move(terms), std::move(bound));
}

std::ostream& operator<<(std::ostream& os, const QSeries& f) {
    return os << render_qseries(f);
}

}  // namespace theta

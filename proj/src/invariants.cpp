#include "theta/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>

#include "theta/threads.hpp"

namespace theta {

namespace {

mpz_class mpz_from_int128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(u));
    return neg ? mpz_class(-r) : r;
}

bool lex_positive(const std::vector<long>& coords) {
    for (long c : coords) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;
}

struct ScaledVectors {
    bool ok = false;
    long long den = 1;
    std::vector<std::vector<long>> coords;
    std::vector<long long> norms;  // den * exact norm
};

// Integer view of the nonzero lex-positive half of the enumerated vectors,
// sorted by norm. ok == false when anything falls outside the guards.
ScaledVectors scaled_half_set(const GramMatrix& a, const std::vector<LatticeVector>& vecs,
                              const ScaledGram& s) {
    ScaledVectors r;
    if (!s.ok) return r;
    for (const auto& row : s.num)
        for (long long v : row)
            if (std::llabs(v) > (1LL << 20)) return r;
    std::vector<std::pair<long long, const LatticeVector*>> keyed;
    for (const auto& v : vecs) {
        if (!lex_positive(v.coords)) continue;
        for (long c : v.coords)
            if (std::labs(c) > (1L << 10)) return r;
        Rational scaled_norm = v.norm * Rational(s.den);
        if (scaled_norm.get_den() != 1 || !scaled_norm.get_num().fits_slong_p()) return r;
        keyed.emplace_back(scaled_norm.get_num().get_si(), &v);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& l, const auto& rhs) { return l.first < rhs.first; });
    r.den = s.den;
    for (const auto& [norm, pv] : keyed) {
        r.coords.push_back(pv->coords);
        r.norms.push_back(norm);
    }
    r.ok = true;
    return r;
}

long long int_inner(const std::vector<std::vector<std::int64_t>>& m,
                    const std::vector<long>& a, const std::vector<long>& b) {
    const std::size_t n = a.size();
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        long long row = 0;
        for (std::size_t j = 0; j < n; ++j) row += m[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

}  // namespace

QSeries theta_series(const GramMatrix& a, const Rational& x) {
    QSeries f(x);
    for (const auto& v : enumerate_vectors(a, x)) f.add_term(v.norm, 1);
    return f;
}

QSeries dtheta(const GramMatrix& a, const SymMatrix& b, const Rational& x) {
    if (b.dim() != a.dim()) throw DimensionMismatch("dtheta: dimension mismatch");
    QSeries f(x);
    for (const auto& v : enumerate_vectors(a, x)) f.add_term(v.norm, b.eval(v.coords));
    return f;
}

Theta11Report theta11_direct(const GramMatrix& a, const Rational& x) {
    const long n = static_cast<long>(a.dim());
    QSeries f(x);
    auto vecs = enumerate_vectors(a, x);
    ScaledGram s = scale_to_int(a.entries());
    ScaledVectors half = scaled_half_set(a, vecs, s);
    if (half.ok && x.get_num().fits_slong_p() && x.get_den().fits_slong_p()) {
        const long long xn = x.get_num().get_si(), xd = x.get_den().get_si();
        // exponent key = den * (norm_g + norm_d); coefficient accumulator is
        // den^2 * 2n * (true value), kept integral
        const std::size_t cnt = half.coords.size();
        auto sum_range = [&](std::size_t lo, std::size_t hi) {
            std::map<long long, __int128> part;
            for (std::size_t i = lo; i < hi; ++i) {
                for (std::size_t j = 0; j < cnt; ++j) {
                    const long long key = half.norms[i] + half.norms[j];
                    if (static_cast<__int128>(key) * xd >
                        static_cast<__int128>(xn) * half.den)
                        break;  // norms ascending in j
                    long long ip = int_inner(s.num, half.coords[i], half.coords[j]);
                    part[key] += static_cast<__int128>(ip) * ip * n -
                                 static_cast<__int128>(half.norms[i]) * half.norms[j];
                }
            }
            return part;
        };
        const unsigned workers =
            std::max(1u, std::min(worker_threads(),
                                  static_cast<unsigned>(cnt / 512 + 1)));
        std::map<long long, __int128> acc;
        if (workers == 1) {
            acc = sum_range(0, cnt);
        } else {
            std::vector<std::future<std::map<long long, __int128>>> parts;
            for (unsigned w = 0; w < workers; ++w)
                parts.push_back(std::async(std::launch::async, sum_range,
                                           cnt * w / workers, cnt * (w + 1) / workers));
            // integer addition commutes, so the merge is order independent
            for (auto& fut : parts)
                for (const auto& [key, val] : fut.get()) acc[key] += val;
        }
        const Rational unit = Rational(4) / (Rational(2 * n) * Rational(s.den) * Rational(s.den));
        for (const auto& [key, val] : acc) {
            Rational e = Rational(static_cast<long>(key)) / Rational(s.den);
            f.add_term(e, Rational(mpz_from_int128(val)) * unit);
        }
        return {std::move(f), Theta11Route::direct, x};
    }
    // exact fallback without the integer fast path
    std::vector<const LatticeVector*> half_vecs;
    for (const auto& v : vecs)
        if (lex_positive(v.coords)) half_vecs.push_back(&v);
    std::stable_sort(half_vecs.begin(), half_vecs.end(),
                     [](const LatticeVector* l, const LatticeVector* r) {
                         return l->norm < r->norm;
                     });
    const Rational inv2n(1, 2 * n);
    for (const auto* g : half_vecs) {
        for (const auto* d : half_vecs) {
            Rational e = g->norm + d->norm;
            if (e > x) break;
            Rational ip = a.inner(g->coords, d->coords);
            f.add_term(e, Rational(4) * (ip * ip / 2 - g->norm * d->norm * inv2n));
        }
    }
    return {std::move(f), Theta11Route::direct, x};
}

Theta11Report theta11_harmonic(const GramMatrix& a, const Rational& x) {
    TangentBasis basis = tangent_basis(a);
    const std::size_t m = basis.vectors.size();
    QSeries f(x);
    if (m == 0) return {std::move(f), Theta11Route::harmonic, x};
    std::vector<QSeries> dthetas;
    dthetas.reserve(m);
    for (const auto& b : basis.vectors) dthetas.push_back(dtheta(a, b, x));
    RationalMatrix ginv = mat_inverse(basis.killing_gram);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = j; k < m; ++k) {
            if (ginv[j][k] == 0) continue;
            Rational c = (j == k) ? ginv[j][k] : Rational(2) * ginv[j][k];
            f = add(f, scale(c, mul(dthetas[j], dthetas[k])));
        }
    }
    return {std::move(f), Theta11Route::harmonic, x};
}

WronskianResult wronskian(const GramMatrix& a, const Rational& x) {
    return wronskian(tangent_basis(a), x);
}

WronskianResult wronskian(const TangentBasis& basis, const Rational& x) {
    const std::size_t m = basis.vectors.size();
    if (m == 0) {
        // rank-1 forms have an empty tangent hyperplane; the empty
        // determinant is 1
        QSeries one = QSeries::constant(1, x);
        return {one, Rational(1), one};
    }
    std::vector<std::vector<QSeries>> rows;
    rows.reserve(m);
    std::vector<QSeries> current;
    current.reserve(m);
    for (const auto& b : basis.vectors) current.push_back(dtheta(basis.base_form, b, x));
    for (std::size_t k = 0; k < m; ++k) {
        rows.push_back(current);
        if (k + 1 < m)
            for (auto& entry : current) entry = qderiv(entry);
    }
    QSeries raw = det_series(rows);
    Rational gram_det = mat_det(basis.killing_gram);
    QSeries normalized = scale(Rational(1) / gram_det, mul(raw, raw));
    return {std::move(raw), std::move(gram_det), std::move(normalized)};
}

long wronskian_weight(long n) { return (n + 2) * (n + 2) * n * (n - 1) / 2; }

QSeries rankin_cohen_f1(const QSeries& f, long n1, const QSeries& g, long n2) {
    // weights k = n1/2, l = n2/2; F1 = k f Dg - l (Df) g
    QSeries kfdg = scale(frac(n1, 2), mul(f, qderiv(g)));
    QSeries ldfg = scale(frac(n2, 2), mul(qderiv(f), g));
    return sub(kfdg, ldfg);
}

QSeries theta11_direct_sum(const QSeries& theta1, const QSeries& theta11_1, long n1,
                           const QSeries& theta2, const QSeries& theta11_2, long n2) {
    const long n = n1 + n2;
    QSeries t1 = mul(theta11_1, mul(theta2, theta2));
    QSeries t2 = mul(theta11_2, mul(theta1, theta1));
    QSeries f1 = rankin_cohen_f1(theta1, n1, theta2, n2);
    Rational c = Rational(kRankinCohenSquareCalibration) / (Rational(n1 * n2) * n);
    return add(add(t1, t2), scale(c, mul(f1, f1)));
}

GramMatrix direct_sum(const GramMatrix& a1, const GramMatrix& a2) {
    const std::size_t n1 = a1.dim(), n2 = a2.dim();
    RationalMatrix e(n1 + n2, std::vector<Rational>(n1 + n2, Rational(0)));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) e[i][j] = a1.at(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) e[n1 + i][n1 + j] = a2.at(i, j);
    return GramMatrix::validate(e);
}

InvariantComparison compare_invariants(const GramMatrix& a1, const GramMatrix& a2,
                                       const Rational& x) {
    if (a1.dim() != a2.dim())
        throw DimensionMismatch("compare_invariants: rank mismatch");
    InvariantComparison r;
    r.theta_first_diff = first_difference(theta_series(a1, x), theta_series(a2, x));
    r.theta11_first_diff =
        first_difference(theta11_direct(a1, x).series, theta11_direct(a2, x).series);
    r.theta_equal = !r.theta_first_diff.has_value();
    r.theta11_equal = !r.theta11_first_diff.has_value();
    return r;
}

std::optional<Rational> first_difference(const QSeries& f, const QSeries& g) {
    const Rational bound = std::min(f.bound(), g.bound());
    std::optional<Rational> diff;
    auto note = [&](const Rational& e) {
        if (e <= bound && (!diff || e < *diff)) diff = e;
    };
    for (const auto& [e, c] : f.terms())
        if (g.coeff(e) != c) note(e);
    for (const auto& [e, c] : g.terms())
        if (f.coeff(e) != c) note(e);
    return diff;
}

}  // namespace theta

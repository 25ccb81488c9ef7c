#include "theta/rank2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace theta {

namespace {

void require_rank2(const GramMatrix& a) {
    if (a.dim() != 2) throw DimensionMismatch("rank-2 operation on a form of rank " +
                                              std::to_string(a.dim()));
}

using Mat2 = std::vector<std::vector<long>>;

Mat2 mat2_mul(const Mat2& l, const Mat2& r) {
    return {{l[0][0] * r[0][0] + l[0][1] * r[1][0], l[0][0] * r[0][1] + l[0][1] * r[1][1]},
            {l[1][0] * r[0][0] + l[1][1] * r[1][0], l[1][0] * r[0][1] + l[1][1] * r[1][1]}};
}

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

}  // namespace

std::pair<GramMatrix, Mat2> reduce_rank2(const GramMatrix& g) {
    require_rank2(g);
    Rational a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 1);
    Mat2 t = {{1, 0}, {0, 1}};
    for (int iter = 0; iter < 1000; ++iter) {
        // shear e2 -> e2 - round(b/a) e1
        mpz_class k = round_nearest(b / a);
        if (k != 0) {
            if (!k.fits_slong_p()) throw std::overflow_error("reduce_rank2: huge shear");
            long kl = k.get_si();
            c = c - 2 * Rational(kl) * b + Rational(kl) * Rational(kl) * a;
            b = b - Rational(kl) * a;
            t = mat2_mul(t, Mat2{{1, -kl}, {0, 1}});
            continue;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;  // keep det(T) = +1 with the rotation-like swap
            t = mat2_mul(t, Mat2{{0, -1}, {1, 0}});
            continue;
        }
        break;
    }
    if (sgn(b) < 0) {
        b = -b;
        t = mat2_mul(t, Mat2{{1, 0}, {0, -1}});
    }
    if (!(2 * b <= a && a <= c && sgn(b) >= 0))
        throw std::logic_error("reduce_rank2 failed to converge");
    GramMatrix reduced = transform(g, t);
    return {std::move(reduced), std::move(t)};
}

Rank2Class classify_rank2(const GramMatrix& g) {
    auto [reduced, t] = reduce_rank2(g);
    const Rational a = reduced.at(0, 0), b = reduced.at(0, 1), c = reduced.at(1, 1);
    Rank2Class r{Rank2Verdict::Nondegenerate, 0, reduced, t};
    const Rational det = a * c - b * b;
    r.tau_re = to_double(b / a);
    r.tau_im = std::sqrt(to_double(det)) / to_double(a);
    const bool gauss_like = (b == 0 && a == c);
    const bool eisenstein_like = (2 * b == a && a == c);
    if (gauss_like || eisenstein_like) {
        r.verdict = Rank2Verdict::Vanishing;
    } else if (b == 0) {
        r.verdict = Rank2Verdict::Degenerate;
        r.degenerate_case = 1;
    } else if (2 * b == a) {
        r.verdict = Rank2Verdict::Degenerate;
        r.degenerate_case = 2;
    } else if (a == c) {
        r.verdict = Rank2Verdict::Degenerate;
        r.degenerate_case = 3;
    }
    return r;
}

DetDThetaRank2 det_dtheta_rank2(const GramMatrix& g, const Rational& x) {
    require_rank2(g);
    QSeries f(x);
    auto vecs = enumerate_vectors(g, x);
    // signs cancel pairwise in both <.,.> and the coordinate determinant,
    // so the full sum is 4x the sum over lex-positive representatives
    std::vector<const LatticeVector*> half;
    for (const auto& v : vecs)
        if (lex_positive(v.coords)) half.push_back(&v);
    std::stable_sort(half.begin(), half.end(), [](const auto* l, const auto* r) {
        return l->norm < r->norm;
    });
    ScaledGram s = scale_to_int(g.entries());
    bool fast = s.ok && x.get_num().fits_slong_p() && x.get_den().fits_slong_p();
    if (fast)
        for (const auto* v : half)
            for (long c : v->coords)
                if (std::labs(c) > (1L << 10)) { fast = false; break; }
    if (fast) {
        const long long xn = x.get_num().get_si(), xd = x.get_den().get_si();
        std::vector<long long> norms(half.size());
        for (std::size_t i = 0; i < half.size(); ++i) {
            Rational sn = half[i]->norm * Rational(s.den);
            if (sn.get_den() != 1 || !sn.get_num().fits_slong_p()) { fast = false; break; }
            norms[i] = sn.get_num().get_si();
        }
        if (fast) {
            std::map<long long, __int128> acc;  // key: den * exponent
            for (std::size_t i = 0; i < half.size(); ++i) {
                const auto& lc = half[i]->coords;
                for (std::size_t j = 0; j < half.size(); ++j) {
                    const long long key = norms[i] + norms[j];
                    if (static_cast<__int128>(key) * xd >
                        static_cast<__int128>(xn) * s.den)
                        break;
                    const auto& mc = half[j]->coords;
                    long long ip = lc[0] * (s.num[0][0] * mc[0] + s.num[0][1] * mc[1]) +
                                   lc[1] * (s.num[1][0] * mc[0] + s.num[1][1] * mc[1]);
                    long long det_lm = lc[0] * mc[1] - lc[1] * mc[0];
                    // den^2 * <l,m> * det(l,m) * (|m|^2 - |l|^2)
                    acc[key] += static_cast<__int128>(ip) * det_lm * (norms[j] - norms[i]);
                }
            }
            const Rational unit =
                Rational(2) / (Rational(s.den) * Rational(s.den) * Rational(s.den));
            for (const auto& [key, val] : acc) {
                Rational e = Rational(static_cast<long>(key)) / Rational(s.den);
                f.add_term(e, Rational(mpz_from_int128(val)) * unit);
            }
            return {std::move(f), g.det()};
        }
    }
    for (const auto* l : half) {
        for (const auto* m : half) {
            Rational e = l->norm + m->norm;
            if (e > x) break;
            Rational ip = g.inner(l->coords, m->coords);
            Rational det_lm(l->coords[0] * m->coords[1] - l->coords[1] * m->coords[0]);
            f.add_term(e, Rational(2) * ip * det_lm * (m->norm - l->norm));
        }
    }
    return {std::move(f), g.det()};
}

MinimalVectorData minimal_vector_test(const GramMatrix& g) {
    require_rank2(g);
    // minimal norm is at most the smaller diagonal entry
    Rational probe = std::min(g.at(0, 0), g.at(1, 1));
    Rational min_norm(0);
    for (const auto& v : enumerate_vectors(g, probe)) {
        if (sgn(v.norm) == 0) continue;
        if (min_norm == 0 || v.norm < min_norm) min_norm = v.norm;
    }
    RationalMatrix scaled = g.entries();
    for (auto& row : scaled)
        for (auto& e : row) e /= min_norm;
    GramMatrix a = GramMatrix::validate(scaled);
    std::vector<std::vector<long>> minimal;
    for (const auto& v : enumerate_vectors(a, 1))
        if (v.norm == 1 && lex_positive(v.coords)) minimal.push_back(v.coords);
    MinimalVectorData data;
    data.pairs = static_cast<long>(minimal.size());
    switch (data.pairs) {
        case 1:
            data.c2 = 4;
            break;
        case 2: {
            Rational ip = a.inner(minimal[0], minimal[1]);
            data.c2 = 16 * ip * ip;
            break;
        }
        case 3:
            data.c2 = 0;
            break;
        default:
            throw std::logic_error("rank-2 form with " + std::to_string(data.pairs) +
                                   " minimal pairs");
    }
    data.theta11_q2 = theta11_direct(a, 2).series.coeff(2);
    if (data.c2 != 4 * data.theta11_q2)
        throw std::logic_error("minimal-vector c2 disagrees with the pair sum");
    return data;
}

std::vector<GramMatrix> gram_candidates_from_spectrum(
    const std::vector<std::pair<Rational, long>>& spectrum) {
    if (spectrum.empty()) throw std::invalid_argument("empty spectrum");
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (sgn(spectrum[i].first) <= 0 || spectrum[i].second <= 0)
            throw std::invalid_argument("spectrum entries must be positive");
        if (i > 0 && !(spectrum[i - 1].first < spectrum[i].first))
            throw std::invalid_argument("spectrum norms must be strictly ascending");
    }
    const Rational a = spectrum.front().first;
    const Rational max_norm = spectrum.back().first;
    std::vector<GramMatrix> matches;
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& [c, cm] : spectrum) {
        if (c < a) continue;
        // b candidates from the norms of (0,1), (1,-1), (1,1)
        std::set<Rational> bs;
        auto consider = [&](const Rational& b) {
            if (sgn(b) >= 0 && 2 * b <= a) bs.insert(b);
        };
        consider(Rational(0));
        for (const auto& [s, sm] : spectrum) {
            consider((a + c - s) / 2);
            consider((s - a - c) / 2);
        }
        for (const Rational& b : bs) {
            if (!seen.insert({c, b}).second) continue;
            RationalMatrix e = {{a, b}, {b, c}};
            GramMatrix cand = GramMatrix::validate(e);
            if (length_spectrum(cand, max_norm) == spectrum) matches.push_back(cand);
        }
    }
    return matches;
}

GramMatrix gram_from_spectrum(const std::vector<std::pair<Rational, long>>& spectrum) {
    auto matches = gram_candidates_from_spectrum(spectrum);
    if (matches.empty()) throw NoMatch("no reduced rank-2 form has this spectrum");
    if (matches.size() > 1)
        throw Ambiguous("truncated spectrum admits " + std::to_string(matches.size()) +
                            " reduced forms",
                        matches);
    return matches.front();
}

}  // namespace theta

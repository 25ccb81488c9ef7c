#include "theta/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

namespace theta {

GramMatrix GramMatrix::validate(const RationalMatrix& entries) {
    const std::size_t n = entries.size();
    if (n == 0) throw NotPositiveDefinite("empty matrix");
    for (const auto& row : entries)
        if (row.size() != n) throw NotSymmetric("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries[i][j] != entries[j][i])
                throw NotSymmetric("entries (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") and (" + std::to_string(j) +
                                   "," + std::to_string(i) + ") differ");
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = entries[i][j];
        if (sgn(mat_det(std::move(minor))) <= 0)
            throw NotPositiveDefinite("leading principal minor " + std::to_string(k) +
                                      " is not positive");
    }
    return GramMatrix(entries);
}

Rational GramMatrix::norm_of(const std::vector<long>& coords) const {
    return inner(coords, coords);
}

Rational GramMatrix::inner(const std::vector<long>& a, const std::vector<long>& b) const {
    const std::size_t n = dim();
    Rational s(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < n; ++j)
            if (b[j] != 0) row += entries_[i][j] * Rational(b[j]);
        s += Rational(a[i]) * row;
    }
    return s;
}

Rational GramMatrix::det() const { return mat_det(entries_); }

RationalMatrix GramMatrix::inverse() const { return mat_inverse(entries_); }

std::vector<std::vector<double>> cholesky_float(const GramMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = to_double(a.at(i, j));
            for (std::size_t k = 0; k < i; ++k) s -= q[k][i] * q[k][j];
            if (i == j) {
                q[i][i] = std::sqrt(std::max(s, 0.0));
            } else {
                q[i][j] = q[i][i] > 0 ? s / q[i][i] : 0.0;
            }
        }
    }
    return q;
}

namespace {

struct EnumContext {
    const GramMatrix& a;
    const std::vector<std::vector<double>>& q;
    const Rational& x;
    double slack;  // absolute float-error allowance on the budget
    ScaledGram scaled;
    __int128 x_num = 0, x_den = 1;
    bool fast = false;
    std::vector<long> coords;
    std::vector<LatticeVector> out;

    // Exact membership test for the current candidate.
    void check_leaf() {
        bool small = true;
        for (long c : coords)
            if (std::labs(c) > (1L << 20)) { small = false; break; }
        if (fast && small) {
            __int128 v = 0;
            const std::size_t n = coords.size();
            for (std::size_t i = 0; i < n; ++i) {
                if (coords[i] == 0) continue;
                long long row = 0;
                for (std::size_t j = 0; j < n; ++j)
                    row += scaled.num[i][j] * coords[j];
                v += static_cast<__int128>(coords[i]) * row;
            }
            if (v * x_den > x_num * scaled.den) return;
            Rational norm(static_cast<long>(v), static_cast<long>(scaled.den));
            norm.canonicalize();
            out.push_back({coords, std::move(norm)});
        } else {
            Rational norm = a.norm_of(coords);
            if (norm <= x) out.push_back({coords, std::move(norm)});
        }
    }
};

// Recursive box walk over the Cholesky bounds, last coordinate first.
// The float stage only proposes candidates; the exact norm test decides
// membership. Ranges are widened by one unit and the budget carries a
// small slack, so rounding cannot drop a valid vector.
void enumerate_rec(EnumContext& ctx, double budget, std::size_t level) {
    if (budget < -ctx.slack) return;
    if (level == static_cast<std::size_t>(-1)) {
        ctx.check_leaf();
        return;
    }
    double center = 0.0;
    for (std::size_t j = level + 1; j < ctx.coords.size(); ++j)
        center -= ctx.q[level][j] * static_cast<double>(ctx.coords[j]);
    const double diag = ctx.q[level][level];
    double halfwidth = diag > 0 ? std::sqrt(std::max(budget, 0.0)) / diag : 0.0;
    center = diag > 0 ? center / diag : 0.0;
    long lo = static_cast<long>(std::floor(center - halfwidth)) - 1;
    long hi = static_cast<long>(std::ceil(center + halfwidth)) + 1;
    for (long v = lo; v <= hi; ++v) {
        ctx.coords[level] = v;
        double used = diag * (static_cast<double>(v) - center);
        enumerate_rec(ctx, budget - used * used, level - 1);
    }
    ctx.coords[level] = 0;
}

}  // namespace

std::vector<LatticeVector> enumerate_vectors(const GramMatrix& a, const Rational& x) {
    if (sgn(x) < 0) return {};
    const std::size_t n = a.dim();
    auto q = cholesky_float(a);
    const double xd = to_double(x);
    EnumContext ctx{a, q, x, 1e-6 * (xd + 1.0) * static_cast<double>(n)};
    ctx.scaled = scale_to_int(a.entries());
    if (ctx.scaled.ok && x.get_num().fits_slong_p() && x.get_den().fits_slong_p() &&
        std::llabs(x.get_num().get_si()) < (1LL << 30) &&
        x.get_den().get_si() < (1LL << 30)) {
        ctx.x_num = x.get_num().get_si();
        ctx.x_den = x.get_den().get_si();
        ctx.fast = true;
    }
    ctx.coords.assign(n, 0);
    enumerate_rec(ctx, xd * (1.0 + 1e-9) + 1e-9, n - 1);
    std::sort(ctx.out.begin(), ctx.out.end(),
              [](const LatticeVector& l, const LatticeVector& r) {
                  return l.coords < r.coords;
              });
    return ctx.out;
}

GramMatrix transform(const GramMatrix& a, const std::vector<std::vector<long>>& t) {
    const std::size_t n = a.dim();
    RationalMatrix tm(n, std::vector<Rational>(n));
    if (t.size() != n) throw DimensionMismatch("transform: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) throw DimensionMismatch("transform: size mismatch");
        for (std::size_t j = 0; j < n; ++j) tm[i][j] = Rational(t[i][j]);
    }
    Rational d = mat_det(tm);
    if (d != 1 && d != -1)
        throw NotUnimodular("transform matrix has determinant " + render_rational(d));
    return GramMatrix::validate(mat_mul(mat_transpose(tm), mat_mul(a.entries(), tm)));
}

std::vector<std::pair<Rational, long>> length_spectrum(const GramMatrix& a,
                                                       const Rational& x) {
    std::map<Rational, long> counts;
    for (const auto& v : enumerate_vectors(a, x))
        if (sgn(v.norm) > 0) ++counts[v.norm];
    return {counts.begin(), counts.end()};
}

GramMatrix parse_gram_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad gram JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("gram"))
        throw ParseError("gram JSON needs fields \"n\" and \"gram\"");
    const std::size_t n = j["n"].get<std::size_t>();
    const auto& rows = j["gram"];
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("gram JSON: \"gram\" must be an n x n array");
    RationalMatrix entries(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw ParseError("gram JSON: row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < n; ++k) {
            if (!rows[i][k].is_string())
                throw ParseError("gram JSON entries must be rational strings");
            entries[i][k] = parse_rational(rows[i][k].get<std::string>());
        }
    }
    return GramMatrix::validate(entries);
}

std::string render_gram_json(const GramMatrix& a) {
    nlohmann::json j;
    j["n"] = a.dim();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : a.entries()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(render_rational(e));
        rows.push_back(std::move(r));
    }
    j["gram"] = std::move(rows);
    return j.dump();
}

ScaledGram scale_to_int(const RationalMatrix& entries) {
    ScaledGram s;
    mpz_class lcm(1);
    for (const auto& row : entries)
        for (const auto& e : row)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
    if (!lcm.fits_slong_p()) return s;
    s.den = lcm.get_si();
    s.num.assign(entries.size(), {});
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (const auto& e : entries[i]) {
            mpz_class scaled = e.get_num() * (lcm / e.get_den());
            if (!scaled.fits_slong_p()) return s;
            long v = scaled.get_si();
            if (std::llabs(v) > (1LL << 30)) return s;
            s.num[i].push_back(v);
        }
    }
    if (s.den > (1LL << 30)) return s;
    s.ok = true;
    return s;
}

}  // namespace theta

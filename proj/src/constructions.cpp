#include "theta/constructions.hpp"

#include "theta/invariants.hpp"

namespace theta {

namespace {

RationalMatrix zeros(std::size_t n) {
    return RationalMatrix(n, std::vector<Rational>(n, Rational(0)));
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

NamedLattice gaussian() {
    return {"A1^2", GramMatrix::validate(identity_matrix(2))};
}

NamedLattice eisenstein() {
    RationalMatrix e = zeros(2);
    e[0][0] = e[1][1] = 1;
    e[0][1] = e[1][0] = Rational(1, 2);
    return {"A2", GramMatrix::validate(e)};
}

NamedLattice e8() {
    // Cartan matrix in Bourbaki numbering; all roots of norm 2
    RationalMatrix e = zeros(8);
    for (int i = 0; i < 8; ++i) e[i][i] = 2;
    const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) e[a][b] = e[b][a] = -1;
    return {"E8", GramMatrix::validate(e)};
}

NamedLattice root_A(long n) {
    if (n < 1) throw UnknownLattice("A_n needs n >= 1");
    const std::size_t m = static_cast<std::size_t>(n);
    RationalMatrix e = zeros(m);
    for (std::size_t i = 0; i < m; ++i) {
        e[i][i] = 2;
        if (i + 1 < m) e[i][i + 1] = e[i + 1][i] = -1;
    }
    return {"A" + std::to_string(n), GramMatrix::validate(e)};
}

NamedLattice root_D(long n) {
    if (n < 2) throw UnknownLattice("D_n needs n >= 2");
    const std::size_t m = static_cast<std::size_t>(n);
    // basis e_i - e_{i+1} (i < n) and e_{n-1} + e_n of the even-sum sublattice
    std::vector<std::vector<long>> b(m, std::vector<long>(m, 0));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        b[i][i] = 1;
        b[i][i + 1] = -1;
    }
    b[m - 1][m - 2] = 1;
    b[m - 1][m - 1] = 1;
    RationalMatrix e = zeros(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            long s = 0;
            for (std::size_t k = 0; k < m; ++k) s += b[i][k] * b[j][k];
            e[i][j] = s;
        }
    return {"D" + std::to_string(n), GramMatrix::validate(e)};
}

NamedLattice cyclotomic_Ap(long p) {
    if (!is_odd_prime(p)) throw UnknownLattice("Lp needs an odd prime, got " +
                                               std::to_string(p));
    const std::size_t m = static_cast<std::size_t>(p - 1);
    RationalMatrix e(m, std::vector<Rational>(m, Rational(-1, 2)));
    for (std::size_t i = 0; i < m; ++i) e[i][i] = frac(p - 1, 2);
    return {"Lp" + std::to_string(p), GramMatrix::validate(e)};
}

NamedLattice power(const NamedLattice& base, long k) {
    if (k < 1) throw UnknownLattice("power needs k >= 1");
    GramMatrix g = base.gram;
    for (long i = 1; i < k; ++i) g = direct_sum(g, base.gram);
    return {base.name + "^" + std::to_string(k), std::move(g)};
}

NamedLattice construct(const std::string& name) {
    if (name == "A1^2" || name == "Gaussian") return gaussian();
    if (name == "A2" || name == "Eisenstein") return eisenstein();
    auto caret = name.rfind('^');
    if (caret != std::string::npos) {
        std::string base = name.substr(0, caret);
        std::string exp = name.substr(caret + 1);
        long k = 0;
        try {
            std::size_t used = 0;
            k = std::stol(exp, &used);
            if (used != exp.size()) throw std::invalid_argument(exp);
        } catch (const std::exception&) {
            throw UnknownLattice("bad power in lattice name: " + name);
        }
        return power(construct(base), k);
    }
    if (name == "E8") return e8();
    auto numeric_tail = [&](std::size_t from) -> long {
        try {
            std::size_t used = 0;
            long v = std::stol(name.substr(from), &used);
            if (from + used != name.size()) throw std::invalid_argument(name);
            return v;
        } catch (const std::exception&) {
            throw UnknownLattice("unknown lattice name: " + name);
        }
    };
    if (name.rfind("Lp", 0) == 0) return cyclotomic_Ap(numeric_tail(2));
    if (!name.empty() && name[0] == 'A') return root_A(numeric_tail(1));
    if (!name.empty() && name[0] == 'D') return root_D(numeric_tail(1));
    throw UnknownLattice("unknown lattice name: " + name);
}

}  // namespace theta

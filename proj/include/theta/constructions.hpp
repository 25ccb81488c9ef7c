#ifndef THETA_CONSTRUCTIONS_HPP
#define THETA_CONSTRUCTIONS_HPP

#include <string>

#include "theta/lattice.hpp"

namespace theta {

struct UnknownLattice : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NamedLattice {
    std::string name;
    GramMatrix gram;
};

NamedLattice gaussian();          // Z[i], identity 2x2
NamedLattice eisenstein();        // Z[(1+sqrt(-3))/2], (1/2)[[2,1],[1,2]]
NamedLattice e8();                // E8 root lattice, minimal norm 2
NamedLattice root_A(long n);      // A_n root lattice, 2 / -1 tridiagonal
NamedLattice root_D(long n);      // D_n root lattice, n >= 2
NamedLattice cyclotomic_Ap(long p);  // Z[zeta_p] under the Minkowski embedding
NamedLattice power(const NamedLattice& base, long k);  // k-fold direct sum

// Name grammar: "A1^2", "A2" (the Eisenstein form), "E8", "A<n>", "D<n>",
// "Lp<p>", and "<name>^<k>" for powers. "A1^2" is the Gaussian form
// (identity), matching the scaling its theta expansion is quoted in.
NamedLattice construct(const std::string& name);

}  // namespace theta

#endif

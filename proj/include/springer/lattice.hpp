// lattice.hpp
//
// A-lattices in F^n, where A = k[[pi]] and F = k((pi)): full-rank
// A-submodules presented by basis matrices over the Laurent scalars.
// Provides the unique triangular (Iwasawa-form) basis, lattice valuations,
// membership and stability tests, symplectic duals and the chain condition,
// graded one-parameter actions (fixed-point and flow-limit tests), and the
// Jordan type of a nilpotent operator induced on L/piL.
//
// Conventions.  Vectors are coordinate columns; a basis matrix holds one
// lattice generator per column, and an endomorphism N acts by N e_i =
// sum_j N_{ji} e_j (column convention).  The canonical basis is upper
// triangular: z_j = pi^{r_j} e_j + sum_{i<j} z_{ij} e_i with every term of
// z_{ij} of degree strictly below r_i.  The exponent vector r determines
// the diagonal part and is a complete invariant among lattices sharing it.

#pragma once

#include <optional>
#include <vector>

#include "springer/laurent.hpp"

namespace springer {

// Weakly decreasing positive parts (Jordan block sizes).
using Partition = std::vector<int>;

// Nilpotent endomorphism reduced mod pi: a matrix over the exact rationals.
using ScalarMatrix = std::vector<std::vector<Rat>>;

// Diagonal lattice: A-span of pi^{r_i} e_i.
struct DiagonalLattice {
  std::vector<long> r;

  int dim() const { return static_cast<int>(r.size()); }
  bool operator==(const DiagonalLattice& o) const { return r == o.r; }
};

// Graded one-parameter action: scaling the coefficient of pi^m e_i by the
// formal exponent nu(m, i) = slope*m + offsets[i].  All fixedness and flow
// decisions are exact integer comparisons of these exponents, never numeric
// evaluations at a group element.
struct NuAction {
  long slope = 0;
  std::vector<long> offsets;

  int dim() const { return static_cast<int>(offsets.size()); }
  long exponent(long m, int i) const { return slope * m + offsets[i]; }
};

// Upper-triangular canonical basis of a lattice; entries are exact, the
// diagonal of z is pi^{r_j}, below-diagonal entries are exact zeros.
struct CanonicalBasis {
  int n = 0;
  std::vector<long> r;
  LaurentMatrix z;

  bool operator==(const CanonicalBasis& o) const { return n == o.n && r == o.r && z == o.z; }
};

// Canonical basis of the column span of b over A.  Accepts exact entries
// (always resolvable) or truncated ones when the windows cover every
// reduction step; the result is exact either way.  Throws DomainError on a
// singular matrix and PrecisionError when truncation blocks a step.
CanonicalBasis canonical_basis(const LaurentMatrix& b);

// The diagonal lattice as a (already canonical) basis.
CanonicalBasis canonical_basis(const DiagonalLattice& d);

// Valuation of the lattice = valuation of det(basis); Sum(r) for canonical
// bases, additive by n under L -> pi L.
long valuation(const CanonicalBasis& l);
long valuation(const LaurentMatrix& b);

// The same lattice shifted by a homothety: pi^a L.
CanonicalBasis shifted_lattice(const CanonicalBasis& l, long a);

// Membership of a coordinate vector in the lattice: greedy top-down
// reduction against the triangular basis.  Exact vectors always decide;
// truncated ones throw PrecisionError when the window cannot certify.
bool contains(const CanonicalBasis& l, const std::vector<Laurent>& v);

// Sublattice test: every column of m lies in l.
bool contains(const CanonicalBasis& l, const CanonicalBasis& m);

// N L subset-of L.  The diagonal overload reduces to the inequalities
// v(N_{ji}) + r_i >= r_j; the general overload reduces each image column.
bool stabilizes(const LaurentMatrix& nmat, const DiagonalLattice& d);
bool stabilizes(const LaurentMatrix& nmat, const CanonicalBasis& l);

// The standard symplectic Gram matrix [[0, I_n], [-I_n, 0]] of dimension 2n.
LaurentMatrix standard_symplectic_gram(int n);

// Dual lattice {v : <v, L> in A} for the standard symplectic pairing
// <x, y> = x^T J y.  Computed exactly: the dual of span(B) is spanned by
// adj(B^T J) shifted by -v(det(B^T J)); satisfies valuation(dual) ==
// -valuation(L) and dual(dual(L)) == L.
CanonicalBasis dual(const CanonicalBasis& l);

// Chain condition: the homothety/duality orbit {pi^a L, pi^b L*} is totally
// ordered by inclusion.  Checked via pi^c L* (subset) L (subset) pi^(c-1) L*
// with c = ceil(2 v(L) / dim), the only shift the valuations allow.
bool is_symplectic(const CanonicalBasis& l);

// Lattice fixed under the graded action: every canonical column is
// concentrated in a single nu-grade (a scalar multiple of itself under the
// action), decided by exact exponent comparison.
bool is_fixed(const NuAction& f, const CanonicalBasis& l);

// Attracting limit of l under the graded flow: the diagonal lattice of the
// canonical exponents, provided every off-diagonal canonical term has
// strictly positive flow exponent nu(m, i) - nu(r_j, j); otherwise the
// lattice is not in the attracting cell and DomainError is thrown.
DiagonalLattice flow_limit(const NuAction& f, const CanonicalBasis& l);

// Almost-commutation with exponent s: nu(m, j) + s == nu(m + l, i) for
// every nonzero coefficient of pi^l in N_{ij}; equivalently
// slope*l + offsets[i] - offsets[j] == s termwise.
bool verify_almost_commute(const LaurentMatrix& nmat, const NuAction& f, long s);

// Reduction of N modulo pi on L/piL for a diagonal lattice L it stabilizes:
// entry (j, i) is the pi^(r_j - r_i) coefficient of N_{ji}.  Throws
// DomainError when N does not stabilize L.
ScalarMatrix induced_endomorphism(const LaurentMatrix& nmat, const DiagonalLattice& d);

// Jordan type of a nilpotent scalar matrix from ranks of its powers:
// #(parts >= j) = rank(M^{j-1}) - rank(M^j).  Throws DomainError when the
// matrix is not nilpotent.
Partition jordan_type(const ScalarMatrix& m);

int rank(ScalarMatrix m);

}  // namespace springer

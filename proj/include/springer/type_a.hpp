// type_a.hpp
//
// The special linear family: nil-elliptic operators mu^n = b pi^s with
// gcd(n, s) = 1, their torus-fixed diagonal lattices (window vectors), the
// composition and necklace bijections, lattice chains with their step
// assignments and intersection matrices, Euler characteristics of the
// fixed-point varieties, and classical Springer-fiber counts.
//
// Window vectors.  A diagonal lattice pi^{r_1}e_1 + ... + pi^{r_n}e_n is
// stable under the standard operator exactly when r_1 <= ... <= r_n <=
// r_1 + s; with total valuation m these exponent tuples form R_{s,m}.  The
// first-difference map phi sends R_{s,m} bijectively onto the compositions
// of s into n parts obeying a congruence mod n, and the ball/wall exchange
// turns those compositions into cell arrangements whose sizes are the
// Jordan block data.  Chains of window vectors (one level per element of a
// gap set J) count points of partial affine flag varieties; their Euler
// characteristics admit the product/s closed form checked here against the
// brute-force chain count.

#pragma once

#include <optional>
#include <vector>

#include "springer/combinatorics.hpp"
#include "springer/lattice.hpp"
#include "springer/laurent.hpp"

namespace springer {

// Exponent tuple of a stable torus-fixed diagonal lattice: weakly
// increasing, confined to a window of width s.
struct WindowVector {
  std::vector<long> r;
  long s = 0;

  int n() const { return static_cast<int>(r.size()); }
  long total() const;

  bool operator==(const WindowVector& o) const { return s == o.s && r == o.r; }
  bool operator<(const WindowVector& o) const { return r < o.r; }
};

// Parahoric type: a nonempty subset I of [0, n-1].  Its cyclic gaps
// p_i = j_{i+1} - j_i (wrapping by n) sum to n and drive the closed form.
struct ParahoricTypeA {
  int n = 0;
  std::vector<int> I;  // sorted ascending

  std::vector<int> gaps() const;
};

// Chain of window vectors for a gap set J = {j_1 < ... < j_l = n}: levels
// r^0 <= r^{j_1} <= ... <= r^{j_{l-1}} componentwise, each a window vector,
// with valuations m, m + j_1, ...; the top level r^n = r^0 + (1,..,1) is
// implied and never stored.
struct ChainTuple {
  std::vector<int> J;
  long s = 0;
  std::vector<std::vector<long>> levels;  // levels[0] = r^0, then r^{j_i}

  bool operator==(const ChainTuple& o) const {
    return J == o.J && s == o.s && levels == o.levels;
  }
  bool operator<(const ChainTuple& o) const { return levels < o.levels; }
};

// The step function of a chain: sigma[t] (0-based t) is the level j in J at
// which coordinate t+1 increments.  Fiber sizes are the gaps of J, and
// sigma is nonincreasing along each cell of the dual arrangement of
// phi(r^0) — that monotonicity is exactly chain validity.
struct StepAssignment {
  std::vector<int> J;
  long s = 0;
  std::vector<long> r0;
  std::vector<int> sigma;

  bool operator==(const StepAssignment& o) const {
    return J == o.J && s == o.s && r0 == o.r0 && sigma == o.sigma;
  }
};

// Nonnegative matrix with prescribed row sums d_i - d_{i-1} (d nondecreasing)
// and t columns; with column-sum filter b these count chain fibers.
struct IntersectionMatrix {
  std::vector<int> d;  // nondecreasing, d.front() is the base offset
  int t = 0;
  std::vector<std::vector<int>> q;  // (d.size()-1) rows by t columns

  bool operator==(const IntersectionMatrix& o) const {
    return d == o.d && t == o.t && q == o.q;
  }
  bool operator<(const IntersectionMatrix& o) const { return q < o.q; }
};

// Parameter admissibility for the standard family: s > 0, gcd(n, s) == 1,
// b != 0.  The throwing form names the violated condition.
bool admissible_sl(int n, long s, const Rat& b);
void require_admissible_sl(int n, long s, const Rat& b);

// The standard operator: ones on the superdiagonal, b pi^s in the lower
// left corner; characteristic polynomial mu^n - b pi^s.
LaurentMatrix standard_rep_sl(int n, long s, const Rat& b);

// The grading nu(m, i) = n m - i s (1-based i) that almost-commutes with
// standard_rep_sl(n, s, b) with exponent s.
NuAction nu_sl(int n, long s);

// All window vectors of width s and total m, lexicographically ascending.
// The count is binomial(n+s-1, s) / n = (n+s-1)!/(n! s!), independent of m.
std::vector<WindowVector> enumerate_R(int n, long s, long m);

// First-difference bijection onto congruence-constrained compositions:
// phi(r)_i = r_i - r_{i-1} (+ s for i = 1, indices mod n).  The image
// characterization sum(i c_i) == s - m (mod n) is what phi_inverse checks.
Composition phi(const WindowVector& r);
WindowVector phi_inverse(const Composition& c, long m);

// All valid chains over gap set J (sorted, max = n) at width s, valuation
// m; ordered by (r^0, then level data) lexicographically.
std::vector<ChainTuple> enumerate_chains(const std::vector<int>& J, long s, long m);

// Chain <-> step-assignment <-> intersection-matrix bijections.
StepAssignment sigma_of_chain(const ChainTuple& chain);
ChainTuple chain_of_sigma(const StepAssignment& sig);
IntersectionMatrix intersection_matrix_of_sigma(const StepAssignment& sig);
StepAssignment sigma_of_matrix(const IntersectionMatrix& q, const std::vector<long>& r0, long s);

// All matrices with row sums d_i - d_{i-1} and t columns, optionally
// filtered to prescribed column sums; count formula for the unfiltered set.
std::vector<IntersectionMatrix> enumerate_intersection_matrices(
    const std::vector<int>& d, int t, const std::optional<Composition>& col_sums);
Int count_intersection_matrices(const std::vector<int>& d, int t);

// Euler characteristic of the type-I fixed-point variety for the standard
// operator: (1/s) prod_i binomial(s + p_i - 1, p_i) over the gaps of I.
// The oracle counts chains directly; the two must agree.
Int euler_sl(int n, long s, const ParahoricTypeA& type);
Int euler_sl_oracle(int n, long s, const ParahoricTypeA& type);

// Jordan type of the induced nilpotent on the lattice of r: the nonzero
// cell sizes of the dual arrangement of phi(r), descending.
Partition jordan_type_of_window(const WindowVector& r);

// Classical Springer-fiber Euler characteristic for a nilpotent of the
// given Jordan partition and flag type I (subset of [1, n-1]; the full set
// gives complete flags).  The width parameter defaults to the smallest
// admissible value exceeding the number of parts; the count is independent
// of that choice.
Int springer_euler_sl(const Partition& parts, const std::vector<int>& flag_type);
Int springer_euler_sl(const Partition& parts, const std::vector<int>& flag_type, long s);

}  // namespace springer

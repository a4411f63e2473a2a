// type_c.hpp
//
// The symplectic family: nil-elliptic operators with a single invariant
// factor mu^n = b pi^s, s odd and coprime to n, acting on a 2n-dimensional
// symplectic space.  Covers the torus-fixed diagonal lattices (marker-
// decorated window vectors), their difference coordinates and the pairing
// bijection onto ball arrangements, the directed ball/wall move graph,
// path and chain enumerations over a gap set, the pooling and step-function
// reductions onto intersection matrices, Euler characteristics of the
// fixed-point varieties, the comparison with the special linear family of
// twice the rank, and classical symplectic Springer-fiber counts.
//
// Window vectors.  A diagonal lattice pi^{r_1}e_1 + ... + pi^{r_2n}e_2n is
// stable under the standard operator and symplectic exactly when
// r_n <= ... <= r_1 <= r_{n+1} <= ... <= r_{2n} <= r_n + s and r_{n+i} =
// -r_i + delta_i with each delta_i in {0, 1}; the marker set I = {i :
// delta_i = 1} has size m = sum r_i, the lattice valuation.  Rearranging
// to (r_n, ..., r_1, r_{n+1}, ..., r_{2n}) gives an ordinary window vector
// of rank 2n and width s, so the type-A first-difference machinery applies;
// the difference coordinates q_{-(n-1)}, ..., q_n re-index it so that the
// marker data appears as parities, and summing the mirror pairs q_i +
// q_{-i} produces an arrangement p of s balls in boxes 0..n.
//
// The move graph.  Vertices are the arrangements; moving one ball across a
// wall toggles that wall's membership in the derived marker set I_v, and
// the edge is directed toward the larger set.  Paths between marker levels
// are counted either directly, through monotone chains of window vectors,
// or through intersection matrices obtained by pooling walls into blocks
// and recording when each wall is crossed; all three routes must agree,
// and the closed form is a product of binomials over the gaps of J.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "springer/combinatorics.hpp"
#include "springer/lattice.hpp"
#include "springer/laurent.hpp"
#include "springer/type_a.hpp"

namespace springer {

// Exponent tuple (r_1, ..., r_2n) of a stable symplectic diagonal lattice,
// stored 0-based; s is the window width.  Validity (ordering chain, 0/1
// marker differences, s odd and coprime to n) is enforced by every
// operation that consumes one.
struct SpWindowVector {
  std::vector<long> r;
  long s = 1;

  int half() const { return static_cast<int>(r.size()) / 2; }
  int m() const;                     // marker count = sum of all entries
  std::vector<int> markers() const;  // I = {i : r_i + r_{n+i} = 1}, ascending
  WindowVector rearranged() const;   // (r_n..r_1, r_{n+1}..r_{2n}), rank 2n

  bool operator==(const SpWindowVector& o) const { return s == o.s && r == o.r; }
  bool operator<(const SpWindowVector& o) const { return r < o.r; }
};

// Difference coordinates q_{-(n-1)}, ..., q_0, ..., q_n of a window: the
// first differences of the rearranged tuple read from the middle outward,
// q_0 = r_{n+1} - r_1, q_i = r_i - r_{i+1}, q_{-i} = r_{n+i+1} - r_{n+i},
// q_n = r_n - r_{2n} + s.  Markers are recovered from parities: delta_1 =
// q_0 mod 2, delta_{i+1} = delta_i + q_{-i} - q_i, and q_n is even exactly
// when n is marked.
struct SpQVector {
  std::vector<long> q;  // q[j + n - 1] stores q_j for j in [-(n-1), n]
  long s = 1;

  int half() const { return static_cast<int>(q.size()) / 2; }
  long at(int j) const { return q[static_cast<size_t>(j + half() - 1)]; }
  long& at(int j) { return q[static_cast<size_t>(j + half() - 1)]; }
  std::vector<int> markers() const;

  bool operator==(const SpQVector& o) const { return s == o.s && q == o.q; }
  bool operator<(const SpQVector& o) const { return q < o.q; }
};

// Arrangement of s balls in boxes 0..n: a vertex of the move graph.  The
// derived marker set I_v obeys |{i, i+1} n I_v| = p_i (mod 2) with box 0
// unmarked, so each wall's membership flips with the parity of the box to
// its left.
struct SpVertex {
  Composition p;

  int boxes() const { return p.length(); }
  long width() const { return p.total(); }

  bool operator==(const SpVertex& o) const { return p == o.p; }
  bool operator<(const SpVertex& o) const { return p < o.p; }
};

// The directed move graph on arrangements of s balls in n+1 boxes:
// vertices in lexicographic order, one edge for every single-ball move
// across an unmarked wall, pointing toward the larger marker set (every
// edge raises the marker count by exactly one).
struct BallWallGraph {
  int n = 0;
  long s = 1;
  std::vector<SpVertex> vertices;      // lexicographically ascending
  std::vector<std::vector<int>> out;   // out[i] = target indices, ascending

  int index_of(const SpVertex& v) const;  // throws DomainError if absent
};

// Tuple of vertices, one per gap-set level, linked by directed paths; the
// levels m_i = |I_{v_i}| recover the gap set.
struct PathTuple {
  std::vector<SpVertex> v;

  bool operator==(const PathTuple& o) const { return v == o.v; }
  bool operator<(const PathTuple& o) const { return v < o.v; }
};

// Jordan data 2n = 2 n_0 + 2 (n_1 + ... + n_l): one block of size 2 n_0
// plus each part n_i doubled — the symplectic nilpotent classes with at
// most one block size of odd multiplicity.
struct SymplecticPartition {
  int n0 = 0;
  Partition parts;  // n_1 >= ... >= n_l >= 1, summing to n - n_0

  int n() const;
};

// Admissibility report for the factored data prod_i (mu^d - b_i pi^s):
// regular semisimple needs s != 0, gcd(|s|, d) = 1 and distinct nonzero
// b_i; nil-elliptic additionally needs s > 0 and s odd.  reason names the
// first violated condition and is empty when fully admissible.
struct SpAdmissibility {
  bool regular_semisimple = false;
  bool nil_elliptic = false;
  std::string reason;
};
SpAdmissibility admissible_sp(int r, int d, long s, const std::vector<Rat>& b);
void require_admissible_sp(int n, long s, const Rat& b);

// The standard operator for mu^n - b pi^s on 2n coordinates: ones on the
// subdiagonal of the upper-left block and in the upper-right corner entry
// (1, n+1), minus ones on the superdiagonal of the lower-right block, and
// (-1)^{n+1} b pi^s at (2n, n); characteristic polynomial mu^{2n} - b pi^s.
// The general overload takes a monic degree-n polynomial h with exact
// monomial coefficients and places (-1)^j h_j at (n+j, j); then the
// characteristic polynomial is h evaluated at mu^2.  Both satisfy
// M^T J + J M = 0 for the standard symplectic Gram matrix J.
LaurentMatrix standard_rep_sp(int n, long s, const Rat& b);
LaurentMatrix standard_rep_sp(const CharPoly& h);

// Membership in the symplectic algebra: M^T J + J M == 0.
bool verify_symplectic_member(const LaurentMatrix& m);

// The grading nu(m, i) = 2dm + is, nu(m, d+i) = 2dm + (1-i)s (1-based i up
// to d) that almost-commutes with the standard operator with exponent s.
NuAction nu_sp(int d, long s);

// All symplectic window vectors with marker count m, ascending by r.  The
// count is binomial(t+m, m) binomial(t+n-m, n-m) with t = (s-1)/2.
std::vector<SpWindowVector> enumerate_R_sp(int n, long s, int m);

// Difference coordinates and their inverse.
SpQVector q_coords(const SpWindowVector& r);
SpWindowVector q_coords_inverse(const SpQVector& q);

// Pairing bijection onto arrangements: p = (q_0, q_1 + q_{-1}, ...,
// q_{n-1} + q_{-(n-1)}, q_n).  The inverse splits each middle entry into
// floor halves, placing the larger half on the marked side when exactly
// one of the walls i, i+1 is marked.
SpVertex psi_sp(const SpQVector& q);
SpQVector psi_sp_inverse(const SpVertex& v);

// The composite window -> vertex map and its inverse.
SpVertex vertex_of_window(const SpWindowVector& r);
SpWindowVector window_of_vertex(const SpVertex& v);

// Derived marker set of an arrangement, ascending.
std::vector<int> vertex_markers(const SpVertex& v);

// Number of marker sets of size m in [1, n] whose extension by n+1 has
// exactly j adjacent pairs: binomial(m, j) binomial(n-m, m-j), tabulated
// for j in [0, m]; the oracle scans all subsets.  count_G is the number of
// arrangements with marker count m at width s = 2t+1, in closed form
// binomial(t+m, m) binomial(t+n-m, n-m).
std::vector<Int> succession_counts(int n, int m);
std::vector<Int> succession_counts_oracle(int n, int m);
Int count_G(int n, long s, int m);

// All move-graph out-edges of an arrangement, ascending; the full graph.
std::vector<SpVertex> delta_out_edges(const SpVertex& v);
BallWallGraph delta_graph(int n, long s);

// All vertex tuples over the gap set J = {m_1 < ... < m_l} (subset of
// [0, n]) whose consecutive members are linked by directed paths,
// lexicographically ascending.  Because each edge raises the marker count
// by one, consecutive reachability is equivalent to one path through all
// levels; the test suite asserts this rather than assuming it.
std::vector<PathTuple> enumerate_E(int n, long s, const std::vector<int>& J);

// The definition-level oracle: tuples of window vectors at the levels of
// J, componentwise monotone, ascending by tuple.  In bijection with
// enumerate_E by applying the window -> vertex map levelwise.
std::vector<std::vector<SpWindowVector>> enumerate_sp_chains(int n, long s,
                                                             const std::vector<int>& J);

// Pooling map: merge wall cells 2k and 2k+1 of the arrangement into block
// k, giving a composition of n into t+1 blocks.  At marker count 0 the
// pooling is a bijection; eta0_inverse rebuilds the unique base vertex
// (odd cells empty).  tau picks the member of the fiber over a that moved
// ball 2k+1 past the last c_k walls of block k; c ranges over the
// blockwise-bounded compositions c_k in [0, a_k].
Composition eta(const SpVertex& v);
SpVertex eta0_inverse(const Composition& a);
SpVertex tau(const Composition& a, const Composition& c);

// Step function of a path tuple: sigma maps each wall to the stage at
// which it is crossed — stage 0 walls are marked in v_1, stage i walls in
// v_{i+1} but not v_i, stage l walls never (sigma[w-1] stores the stage of
// wall w).  zeta records per stage how many crossed walls fall in each
// pooled block of eta(v_1): an intersection matrix with row sums the gaps
// of J and column sums eta(v_1).
std::pair<SpVertex, std::vector<int>> theta(const PathTuple& e);
IntersectionMatrix zeta(const PathTuple& e);

// Outcome counts of the single-cell crossing game: a cell of d walls with
// a boundary ball on the right only (alpha) or on both sides (beta),
// crossing moves[i] fresh walls at step i, where step 0 may only move the
// right ball leftward.  Outcomes are the distinct sequences of cell
// configurations after steps 1, 2, ...; infeasible schedules count 0.
// Closed forms: alpha = 1 and beta = prod_{i >= 1} (moves[i] + 1).
Int alpha_game(int d, const std::vector<int>& moves);
Int beta_game(int d, const std::vector<int>& moves);

// Number of path tuples projecting to a given intersection matrix under
// zeta: the product of (q_ik + 1) over interior rows (neither first nor
// last) and columns k >= 1.
Int fiber_count(const IntersectionMatrix& q);

// gamma(d, t) = sum over compositions y of d into t parts of
// prod (y_k + 1) = binomial(2t + d - 1, d); the oracle sums directly.
Int gamma_count(int d, int t);
Int gamma_count_oracle(int d, int t);

// Euler characteristic of the type-J fixed-point variety for the standard
// symplectic operator: with gaps j_i between consecutive levels of
// (0, m_1, ..., m_l, n) and t = (s-1)/2,
//   binomial(t+j_0, t) binomial(t+j_l, t) prod_{0<i<l} binomial(s+j_i-1, j_i).
// The oracle counts monotone window chains; formula, chain count, and
// |enumerate_E| must agree.
Int euler_sp(int n, long s, const std::vector<int>& J);
Int euler_sp_oracle(int n, long s, const std::vector<int>& J);

// Both sides of the rank-doubling comparison: the symplectic count for J
// and the special linear count of type (J u (2n - J)) \ {2n} at the same
// width.  The symplectic side never exceeds the special linear side, with
// equality exactly when n = 1 or s = 1.
struct SpSlComparison {
  Int sp;
  Int sl;
  bool equal = false;
};
SpSlComparison compare_with_sl(int n, long s, const std::vector<int>& J);

// Classical symplectic Springer-fiber Euler characteristic for the
// nilpotent with Jordan blocks (2 n_0, n_1, n_1, ..., n_l, n_l) and
// isotropic flag type J (nonempty subset of [1, n]; the full set gives
// complete flags): the sum of fiber_count over intersection matrices with
// level vector (0, 0, m_1, ..., m_l, n) and column sums (n_0, ..., n_l,
// 0, ...).  The width must be odd, exceed 2l, and be coprime to n; it
// defaults to the smallest such value, and the count is independent of
// the choice.  For complete flags the count is n! 2^{n_1+...+n_l} /
// (n_0! ... n_l!).
Int springer_euler_sp(const SymplecticPartition& sp, const std::vector<int>& flag_type);
Int springer_euler_sp(const SymplecticPartition& sp, const std::vector<int>& flag_type, long s);

// The marker-free window vector whose induced endomorphism realizes the
// partition's Jordan type: the base vertex of the block composition
// (n_0, ..., n_l, 0, ...), pulled back to window coordinates.
SpWindowVector sp_base_window(const SymplecticPartition& sp, long s);

}  // namespace springer

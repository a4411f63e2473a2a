// combinatorics.hpp
//
// Exact integer combinatorics: compositions (ordered tuples of nonnegative
// integers with a fixed sum — the sets C^t_d), their cyclic (necklace)
// classes, the circular ball/wall duality exchanging s balls in n boxes with
// n walls in s cells, and arbitrary-precision binomial / multinomial
// coefficients.
//
// All enumerations are produced in a deterministic lexicographic order so
// that downstream output (CLI tables, test logs) is byte-reproducible.
// Every function here is pure; there is no shared mutable state.

#pragma once

#include <optional>
#include <vector>

#include "springer/bigint.hpp"
#include "springer/errors.hpp"

namespace springer {

// Ordered tuple of nonnegative integers with a fixed sum.  Parts index boxes,
// cells or matrix columns, so they stay machine integers; anything counting
// *how many* compositions exist is an Int.
struct Composition {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  int total() const;

  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator<(const Composition& o) const { return parts < o.parts; }
};

// Rotation orbit of a composition under the cyclic group.  The stored
// representative is the lexicographically minimal rotation (the canonical
// choice; any deterministic one would do, but it must be documented and
// fixed).  period = orbit size = smallest d > 0 with rotate(c, d) == c;
// it always divides the length.
struct CyclicClass {
  Composition representative;
  int period = 0;

  bool operator==(const CyclicClass& o) const {
    return period == o.period && representative == o.representative;
  }
};

// Result of the circular ball/wall exchange applied to c in C^n_s:
// cells[k] lists the walls (1-based labels) of cell k+1 in clockwise order
// along the circle.  sizes() is the wall-count composition b in C^s_n.
//
// Anchoring (fixed for reproducibility; all counts are independent of it):
// boxes and walls are numbered clockwise with box t bounded by walls t-1 and
// t (wall 0 = wall n); ball 1 is the first ball encountered counterclockwise
// of wall 1; balls are numbered clockwise from it; cell k consists of the
// walls strictly between ball k-1 and ball k (ball 0 = ball s).
struct DualArrangement {
  std::vector<std::vector<int>> cells;

  Composition sizes() const;
};

// Exact binomial coefficient; 0 when b < 0 or b > a.  Requires a >= 0.
Int binomial(const Int& a, const Int& b);
Int binomial(long a, long b);

// (sum ks)! / prod(ks[i]!), the number of ways to interleave labelled groups.
Int multinomial(const std::vector<int>& ks);

// All compositions of d into t ordered nonnegative parts, lexicographically
// ascending.  t >= 1 required.  The count is binomial(t+d-1, d); enumerations
// that would exceed an internal sanity bound are rejected rather than
// attempted.
std::vector<Composition> enumerate_compositions(int t, int d);
Int count_compositions(long t, long d);

// Lexicographically minimal rotation and rotation period of c.
Composition min_rotation(const Composition& c);
int rotation_period(const Composition& c);

// One CyclicClass per rotation orbit of C^t_d, sorted by representative.
// When gcd(t, d) == 1 every orbit is free (period t) and the class count is
// binomial(t+d-1, d)/t.
std::vector<CyclicClass> cyclic_classes(int t, int d);

// The circular balls<->walls exchange applied to c (n boxes, s = total
// balls).  Requires s >= 1 and gcd(n, s) == 1, which makes the exchange a
// bijection between cyclic classes of C^n_s and of C^s_n.
DualArrangement dual_arrangement(const Composition& c);

long gcd_long(long a, long b);

}  // namespace springer

// type_c.cpp
//
// Symplectic-family combinatorics.  The window enumeration scans marker
// sets jointly with the left-half exponents (the right half is forced by
// the mirror rule), and everything downstream of the windows is phrased on
// the ball/wall side: difference coordinates reindex the rearranged window
// through the special linear first-difference map, the pairing bijection
// folds mirror gaps into single boxes, and the move graph is built by
// literal single-ball moves with the marker set read off a parity
// recursion.  Counting identities (succession tables, arrangement counts,
// crossing games, the Euler formulas) are computed in closed form here and
// validated against exhaustive scans in the test suite.

#include "springer/type_c.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "springer/errors.hpp"

namespace springer {

namespace {

// Shared parameter gate: positive rank, positive odd width coprime to the
// rank (the regular nil-elliptic regime; other widths have no isolated
// fixed points and no window combinatorics).
void require_sp_params(int n, long s) {
  if (n < 1) throw DomainError("symplectic family: rank must be positive");
  if (s < 1) throw DomainError("symplectic family: width must be positive");
  if (s % 2 == 0) throw DomainError("symplectic family: width must be odd");
  if (gcd_long(n, s) != 1)
    throw DomainError("symplectic family: width must be coprime to the rank");
}

void require_sp_window(const SpWindowVector& w) {
  if (w.r.size() < 2 || w.r.size() % 2 != 0)
    throw DomainError("symplectic window: coordinate count must be even and positive");
  const int n = w.half();
  require_sp_params(n, w.s);
  const std::vector<long>& r = w.r;
  for (int i = 0; i + 1 < n; ++i)
    if (r[static_cast<size_t>(i)] < r[static_cast<size_t>(i) + 1])
      throw DomainError("symplectic window: left half must be weakly decreasing");
  if (r[0] > r[static_cast<size_t>(n)])
    throw DomainError("symplectic window: left half must not exceed the right half");
  for (int i = n; i + 1 < 2 * n; ++i)
    if (r[static_cast<size_t>(i)] > r[static_cast<size_t>(i) + 1])
      throw DomainError("symplectic window: right half must be weakly increasing");
  if (r[static_cast<size_t>(2 * n) - 1] > r[static_cast<size_t>(n) - 1] + w.s)
    throw DomainError("symplectic window: width exceeded");
  for (int i = 0; i < n; ++i) {
    const long d = r[static_cast<size_t>(i)] + r[static_cast<size_t>(n + i)];
    if (d != 0 && d != 1)
      throw DomainError("symplectic window: mirror sums must be 0 or 1");
  }
}

void require_sp_q(const SpQVector& v) {
  if (v.q.size() < 2 || v.q.size() % 2 != 0)
    throw DomainError("difference coordinates: entry count must be even and positive");
  require_sp_params(v.half(), v.s);
  long total = 0;
  for (long x : v.q) {
    if (x < 0) throw DomainError("difference coordinates: entries must be nonnegative");
    total += x;
  }
  if (total != v.s)
    throw DomainError("difference coordinates: entries must sum to the width");
  (void)v.markers();  // runs the parity/marker consistency checks
}

void require_sp_vertex(const SpVertex& v) {
  if (v.p.length() < 2)
    throw DomainError("arrangement: needs at least two boxes");
  for (int x : v.p.parts)
    if (x < 0) throw DomainError("arrangement: box counts must be nonnegative");
  require_sp_params(v.p.length() - 1, v.p.total());
}

void require_levels(const std::vector<int>& J, int n, const std::string& what) {
  if (J.empty()) throw DomainError(what + ": level set must be nonempty");
  for (size_t i = 0; i < J.size(); ++i) {
    if (J[i] < 0 || J[i] > n)
      throw DomainError(what + ": levels must lie between 0 and the rank");
    if (i > 0 && J[i] <= J[i - 1])
      throw DomainError(what + ": levels must be strictly increasing");
  }
}

// Cells of the dual arrangement: cell c (of total+1 cells) holds the walls
// with exactly c balls to their left, so wall w lands in the cell given by
// the box prefix sum through box w-1.
std::vector<int> wall_cells(const Composition& p) {
  const int walls = p.length() - 1;
  std::vector<int> b(static_cast<size_t>(p.total()) + 1, 0);
  long left = 0;
  for (int w = 1; w <= walls; ++w) {
    left += p.parts[static_cast<size_t>(w) - 1];
    ++b[static_cast<size_t>(left)];
  }
  return b;
}

// Inverse direction: ball x lands in the box counting the walls in cells
// 0..x-1, so boxes are recovered from cell prefix sums.
Composition balls_boxes(const std::vector<int>& b) {
  const int balls = static_cast<int>(b.size()) - 1;
  long boxes = 1;
  for (int x : b) boxes += x;
  std::vector<int> p(static_cast<size_t>(boxes), 0);
  long left = 0;
  for (int x = 1; x <= balls; ++x) {
    left += b[static_cast<size_t>(x) - 1];
    ++p[static_cast<size_t>(left)];
  }
  return Composition{p};
}

bool window_le(const SpWindowVector& a, const SpWindowVector& b) {
  for (size_t i = 0; i < a.r.size(); ++i)
    if (a.r[i] > b.r[i]) return false;
  return true;
}

void require_sp_partition(const SymplecticPartition& sp) {
  if (sp.n0 < 0)
    throw DomainError("symplectic block data: leading block must be nonnegative");
  for (size_t i = 0; i < sp.parts.size(); ++i) {
    if (sp.parts[i] < 1)
      throw DomainError("symplectic block data: parts must be positive");
    if (i > 0 && sp.parts[i] > sp.parts[i - 1])
      throw DomainError("symplectic block data: parts must be weakly decreasing");
  }
  if (sp.n() < 1)
    throw DomainError("symplectic block data: total rank must be positive");
}

// Block vector (n_0, n_1, ..., n_l) padded with zeros to t+1 entries.
std::vector<int> padded_blocks(const SymplecticPartition& sp, long t) {
  std::vector<int> a(static_cast<size_t>(t) + 1, 0);
  a[0] = sp.n0;
  for (size_t i = 0; i < sp.parts.size(); ++i) a[i + 1] = sp.parts[i];
  return a;
}

// The single-cell crossing game: d walls in a row, a boundary ball at the
// right end and (for the two-ball variant) at the left end.  Step i crosses
// moves[i] walls that no ball has crossed before; step 0 may only move the
// right ball leftward, and later steps split their quota freely between the
// left ball (crossing from the left end inward) and the right ball.  The
// outcomes are the distinct sequences of (left-crossed, right-crossed)
// states after steps 1, 2, ...; a schedule demanding more walls than the
// cell holds has no outcomes.
Int crossing_game(int d, const std::vector<int>& moves, bool with_left_ball) {
  if (d < 0) throw DomainError("crossing game: wall count must be nonnegative");
  long used = 0;
  for (int z : moves) {
    if (z < 0) throw DomainError("crossing game: moves must be nonnegative");
    used += z;
  }
  if (used > d) return Int(0);
  std::set<std::vector<std::pair<int, int>>> outcomes;
  std::vector<std::pair<int, int>> trail;
  std::function<void(size_t, int, int)> run = [&](size_t step, int x, int y) {
    if (step == moves.size()) {
      outcomes.insert(trail);
      return;
    }
    const int z = moves[step];
    if (step == 0) {
      run(1, x, y + z);  // right ball only, and step 0 is not recorded
      return;
    }
    const int hi = with_left_ball ? z : 0;
    for (int j = 0; j <= hi; ++j) {
      trail.emplace_back(x + j, y + z - j);
      run(step + 1, x + j, y + z - j);
      trail.pop_back();
    }
  };
  if (moves.empty())
    outcomes.insert(trail);
  else
    run(0, 0, 0);
  return Int(outcomes.size());
}

}  // namespace

int SpWindowVector::m() const {
  long total = 0;
  for (long x : r) total += x;
  return static_cast<int>(total);
}

std::vector<int> SpWindowVector::markers() const {
  const int n = half();
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (r[static_cast<size_t>(i) - 1] + r[static_cast<size_t>(n + i) - 1] == 1)
      out.push_back(i);
  return out;
}

WindowVector SpWindowVector::rearranged() const {
  const int n = half();
  std::vector<long> out(r.size());
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = r[static_cast<size_t>(n - 1 - i)];
  for (int i = n; i < 2 * n; ++i) out[static_cast<size_t>(i)] = r[static_cast<size_t>(i)];
  return WindowVector{out, s};
}

std::vector<int> SpQVector::markers() const {
  const int n = half();
  if (q.size() < 2 || q.size() % 2 != 0)
    throw DomainError("difference coordinates: entry count must be even and positive");
  for (long x : q)
    if (x < 0) throw DomainError("difference coordinates: entries must be nonnegative");
  std::vector<int> delta(static_cast<size_t>(n) + 1, 0);
  delta[1] = static_cast<int>(at(0) % 2);
  for (int i = 1; i <= n - 1; ++i) {
    const long d = delta[static_cast<size_t>(i)] + at(-i) - at(i);
    if (d != 0 && d != 1)
      throw DomainError("difference coordinates: mirror gaps must differ by a 0/1 marker step");
    delta[static_cast<size_t>(i) + 1] = static_cast<int>(d);
  }
  if ((at(n) % 2 == 0) != (delta[static_cast<size_t>(n)] == 1))
    throw DomainError("difference coordinates: top gap parity must match the last marker");
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (delta[static_cast<size_t>(i)] == 1) out.push_back(i);
  return out;
}

int BallWallGraph::index_of(const SpVertex& v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v))
    throw DomainError("move graph: not a vertex of this graph");
  return static_cast<int>(it - vertices.begin());
}

int SymplecticPartition::n() const {
  int total = n0;
  for (int x : parts) total += x;
  return total;
}

SpAdmissibility admissible_sp(int r, int d, long s, const std::vector<Rat>& b) {
  SpAdmissibility out;
  if (r < 1 || d < 1) {
    out.reason = "factor count and degree must be positive";
    return out;
  }
  if (static_cast<int>(b.size()) != r) {
    out.reason = "expected one constant per factor";
    return out;
  }
  if (s == 0) {
    out.reason = "width must be nonzero";
    return out;
  }
  for (const Rat& x : b)
    if (x == 0) {
      out.reason = "factor constants must be nonzero";
      return out;
    }
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (b[i] == b[j]) {
        out.reason = "factor constants must be distinct";
        return out;
      }
  if (gcd_long(d, s < 0 ? -s : s) != 1) {
    out.reason = "width must be coprime to the factor degree";
    return out;
  }
  out.regular_semisimple = true;
  if (s < 0) {
    out.reason = "nil-elliptic family needs positive width";
    return out;
  }
  if (s % 2 == 0) {
    out.reason = "nil-elliptic family needs odd width";
    return out;
  }
  out.nil_elliptic = true;
  return out;
}

void require_admissible_sp(int n, long s, const Rat& b) {
  const SpAdmissibility a = admissible_sp(1, n, s, {b});
  if (!a.nil_elliptic) throw DomainError("symplectic family: " + a.reason);
}

LaurentMatrix standard_rep_sp(const CharPoly& h) {
  const int n = h.degree();
  if (n < 1)
    throw DomainError("standard symplectic operator: degree must be at least one");
  if (!(h.c[0] == Laurent::one()))
    throw DomainError("standard symplectic operator: polynomial must be monic");
  for (int i = 1; i <= n; ++i)
    if (!h.c[static_cast<size_t>(i)].exact() ||
        h.c[static_cast<size_t>(i)].terms().size() > 1)
      throw DomainError("standard symplectic operator: coefficients must be exact monomials");
  LaurentMatrix m(2 * n);
  for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = Laurent::one();
  m.at(0, n) = Laurent::one();
  for (int j = 1; j <= n; ++j) {
    const Laurent& c = h.c[static_cast<size_t>(j)];
    m.at(n + j - 1, j - 1) = (j % 2 == 0) ? c : -c;
  }
  for (int k = n; k <= 2 * n - 2; ++k) m.at(k, k + 1) = -Laurent::one();
  return m;
}

LaurentMatrix standard_rep_sp(int n, long s, const Rat& b) {
  require_admissible_sp(n, s, b);
  CharPoly h;
  h.c.assign(static_cast<size_t>(n) + 1, Laurent::zero());
  h.c[0] = Laurent::one();
  h.c[static_cast<size_t>(n)] = Laurent::monomial(-b, s);
  return standard_rep_sp(h);
}

bool verify_symplectic_member(const LaurentMatrix& m) {
  if (m.n < 2 || m.n % 2 != 0)
    throw DomainError("symplectic membership: dimension must be even and positive");
  const LaurentMatrix j = standard_symplectic_gram(m.n / 2);
  return m.transpose() * j + j * m == LaurentMatrix(m.n);
}

NuAction nu_sp(int d, long s) {
  require_sp_params(d, s);
  NuAction f;
  f.slope = 2L * d;
  f.offsets.assign(static_cast<size_t>(2 * d), 0);
  for (int i = 1; i <= d; ++i) {
    f.offsets[static_cast<size_t>(i) - 1] = static_cast<long>(i) * s;
    f.offsets[static_cast<size_t>(d + i) - 1] = (1 - static_cast<long>(i)) * s;
  }
  return f;
}

std::vector<SpWindowVector> enumerate_R_sp(int n, long s, int m) {
  require_sp_params(n, s);
  if (m < 0 || m > n)
    throw DomainError("symplectic windows: marker count out of range");
  const long t = (s - 1) / 2;
  std::vector<SpWindowVector> out;
  std::vector<int> delta(static_cast<size_t>(n), 0);
  std::vector<long> left(static_cast<size_t>(n), 0);
  // Choose delta_i and r_i together, left to right.  The mirror rule turns
  // the right-half chain into r_{i+1} <= r_i + (delta_{i+1} - delta_i), the
  // middle inequality into r_1 <= 0, and the wraparound into r_n >= -t; the
  // left-half chain bounds every entry below by r_n, so -t prunes all of
  // them.
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (used > m || used + (n - i + 1) < m) return;
    if (i > n) {
      std::vector<long> r(static_cast<size_t>(2 * n));
      for (int k = 0; k < n; ++k) {
        r[static_cast<size_t>(k)] = left[static_cast<size_t>(k)];
        r[static_cast<size_t>(n + k)] =
            -left[static_cast<size_t>(k)] + delta[static_cast<size_t>(k)];
      }
      SpWindowVector w{r, s};
      require_sp_window(w);
      out.push_back(w);
      return;
    }
    for (int dv = 0; dv <= 1; ++dv) {
      const long ub =
          (i == 1) ? 0
                   : left[static_cast<size_t>(i) - 2] +
                         std::min(0, dv - delta[static_cast<size_t>(i) - 2]);
      delta[static_cast<size_t>(i) - 1] = dv;
      for (long v = ub; v >= -t; --v) {
        left[static_cast<size_t>(i) - 1] = v;
        rec(i + 1, used + dv);
      }
    }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SpQVector q_coords(const SpWindowVector& r) {
  require_sp_window(r);
  const int n = r.half();
  SpQVector out;
  out.s = r.s;
  out.q.assign(static_cast<size_t>(2 * n), 0);
  out.at(0) = r.r[static_cast<size_t>(n)] - r.r[0];
  for (int i = 1; i <= n - 1; ++i) {
    out.at(i) = r.r[static_cast<size_t>(i) - 1] - r.r[static_cast<size_t>(i)];
    out.at(-i) = r.r[static_cast<size_t>(n + i)] - r.r[static_cast<size_t>(n + i) - 1];
  }
  out.at(n) = r.r[static_cast<size_t>(n) - 1] - r.r[static_cast<size_t>(2 * n) - 1] + r.s;
  return out;
}

SpWindowVector q_coords_inverse(const SpQVector& q) {
  require_sp_q(q);
  const int n = q.half();
  const std::vector<int> markers = q.markers();
  // The rearranged window reads the gaps top-down, so its first-difference
  // composition is the reversal of the q storage.
  std::vector<int> c(static_cast<size_t>(2 * n));
  for (size_t k = 0; k < c.size(); ++k)
    c[k] = static_cast<int>(q.q[c.size() - 1 - k]);
  const WindowVector rearr = phi_inverse(Composition{c}, static_cast<long>(markers.size()));
  std::vector<long> r(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = rearr.r[static_cast<size_t>(n - 1 - i)];
  for (int i = n; i < 2 * n; ++i) r[static_cast<size_t>(i)] = rearr.r[static_cast<size_t>(i)];
  SpWindowVector out{r, q.s};
  require_sp_window(out);
  if (out.markers() != markers)
    throw DomainError("difference coordinates: marker data is inconsistent");
  return out;
}

SpVertex psi_sp(const SpQVector& q) {
  require_sp_q(q);
  const int n = q.half();
  std::vector<int> p(static_cast<size_t>(n) + 1);
  p[0] = static_cast<int>(q.at(0));
  for (int i = 1; i <= n - 1; ++i)
    p[static_cast<size_t>(i)] = static_cast<int>(q.at(i) + q.at(-i));
  p[static_cast<size_t>(n)] = static_cast<int>(q.at(n));
  return SpVertex{Composition{p}};
}

SpQVector psi_sp_inverse(const SpVertex& v) {
  const std::vector<int> markers = vertex_markers(v);
  const int n = v.p.length() - 1;
  std::vector<bool> in(static_cast<size_t>(n) + 2, false);
  for (int i : markers) in[static_cast<size_t>(i)] = true;
  SpQVector out;
  out.s = v.p.total();
  out.q.assign(static_cast<size_t>(2 * n), 0);
  out.at(0) = v.p.parts[0];
  for (int i = 1; i <= n - 1; ++i) {
    const long h = v.p.parts[static_cast<size_t>(i)] / 2;
    if (in[static_cast<size_t>(i)] && !in[static_cast<size_t>(i) + 1]) {
      out.at(i) = h + 1;
      out.at(-i) = h;
    } else if (!in[static_cast<size_t>(i)] && in[static_cast<size_t>(i) + 1]) {
      out.at(i) = h;
      out.at(-i) = h + 1;
    } else {
      out.at(i) = h;  // the box is even by the parity rule
      out.at(-i) = h;
    }
  }
  out.at(n) = v.p.parts[static_cast<size_t>(n)];
  return out;
}

SpVertex vertex_of_window(const SpWindowVector& r) { return psi_sp(q_coords(r)); }

SpWindowVector window_of_vertex(const SpVertex& v) {
  return q_coords_inverse(psi_sp_inverse(v));
}

std::vector<int> vertex_markers(const SpVertex& v) {
  require_sp_vertex(v);
  const int n = v.p.length() - 1;
  std::vector<int> out;
  // Wall membership flips with the parity of the box on its left; the seed
  // is the absent wall 0, and the final wall n+1 closes consistently
  // because the width is odd.
  int x = 0;
  for (int w = 1; w <= n; ++w) {
    x = (x + v.p.parts[static_cast<size_t>(w) - 1]) % 2;
    if (x == 1) out.push_back(w);
  }
  return out;
}

std::vector<Int> succession_counts(int n, int m) {
  if (n < 1 || m < 0 || m > n)
    throw DomainError("succession table: marker count out of range");
  std::vector<Int> g(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j)
    g[static_cast<size_t>(j)] =
        binomial(static_cast<long>(m), j) * binomial(static_cast<long>(n - m), m - j);
  return g;
}

std::vector<Int> succession_counts_oracle(int n, int m) {
  if (n < 1 || m < 0 || m > n)
    throw DomainError("succession table: marker count out of range");
  if (n > 30) throw DomainError("succession table: exhaustive scan limited to rank 30");
  std::vector<Int> g(static_cast<size_t>(m) + 1, Int(0));
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (__builtin_popcountl(mask) != m) continue;
    int adj = 0;
    for (int i = 1; i < n; ++i)
      if ((mask >> (i - 1) & 1) && (mask >> i & 1)) ++adj;
    if (mask >> (n - 1) & 1) ++adj;  // n and the always-present n+1
    g[static_cast<size_t>(adj)] += 1;
  }
  return g;
}

Int count_G(int n, long s, int m) {
  if (n < 1) throw DomainError("arrangement count: rank must be positive");
  if (s < 1 || s % 2 == 0)
    throw DomainError("arrangement count: width must be positive and odd");
  if (m < 0 || m > n)
    throw DomainError("arrangement count: marker count out of range");
  const long t = (s - 1) / 2;
  return binomial(t + m, m) * binomial(t + n - m, n - m);
}

std::vector<SpVertex> delta_out_edges(const SpVertex& v) {
  const std::vector<int> markers = vertex_markers(v);
  const int n = v.p.length() - 1;
  std::vector<bool> marked(static_cast<size_t>(n) + 1, false);
  for (int w : markers) marked[static_cast<size_t>(w)] = true;
  std::vector<SpVertex> out;
  for (int w = 1; w <= n; ++w) {
    if (marked[static_cast<size_t>(w)]) continue;
    if (v.p.parts[static_cast<size_t>(w) - 1] > 0) {
      SpVertex u = v;
      --u.p.parts[static_cast<size_t>(w) - 1];
      ++u.p.parts[static_cast<size_t>(w)];
      out.push_back(u);
    }
    if (v.p.parts[static_cast<size_t>(w)] > 0) {
      SpVertex u = v;
      --u.p.parts[static_cast<size_t>(w)];
      ++u.p.parts[static_cast<size_t>(w) - 1];
      out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BallWallGraph delta_graph(int n, long s) {
  require_sp_params(n, s);
  BallWallGraph g;
  g.n = n;
  g.s = s;
  for (const Composition& c : enumerate_compositions(n + 1, static_cast<int>(s)))
    g.vertices.push_back(SpVertex{c});
  g.out.assign(g.vertices.size(), {});
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (const SpVertex& u : delta_out_edges(g.vertices[i]))
      g.out[i].push_back(g.index_of(u));
  return g;
}

std::vector<PathTuple> enumerate_E(int n, long s, const std::vector<int>& J) {
  require_sp_params(n, s);
  require_levels(J, n, "path tuples");
  const BallWallGraph g = delta_graph(n, s);
  std::vector<std::vector<int>> at_level(static_cast<size_t>(n) + 1);
  for (size_t i = 0; i < g.vertices.size(); ++i)
    at_level[vertex_markers(g.vertices[i]).size()].push_back(static_cast<int>(i));
  // Every edge raises the marker count by one, so the vertices reachable
  // from u at the next chosen level are the breadth-first frontier after
  // exactly (level gap) steps.
  std::map<std::pair<size_t, int>, std::vector<int>> reach;
  const auto frontier = [&](size_t depth, int u) -> const std::vector<int>& {
    const auto key = std::make_pair(depth, u);
    const auto it = reach.find(key);
    if (it != reach.end()) return it->second;
    std::set<int> cur = {u};
    for (int step = J[depth - 1]; step < J[depth]; ++step) {
      std::set<int> next;
      for (int a : cur)
        for (int b : g.out[static_cast<size_t>(a)]) next.insert(b);
      cur.swap(next);
    }
    return reach.emplace(key, std::vector<int>(cur.begin(), cur.end())).first->second;
  };
  std::vector<PathTuple> out;
  std::vector<int> pick(J.size(), 0);
  std::function<void(size_t)> rec = [&](size_t depth) {
    if (depth == J.size()) {
      PathTuple e;
      for (int idx : pick) e.v.push_back(g.vertices[static_cast<size_t>(idx)]);
      out.push_back(e);
      return;
    }
    const std::vector<int>& cand =
        (depth == 0) ? at_level[static_cast<size_t>(J[0])] : frontier(depth, pick[depth - 1]);
    for (int idx : cand) {
      pick[depth] = idx;
      rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<SpWindowVector>> enumerate_sp_chains(int n, long s,
                                                             const std::vector<int>& J) {
  require_sp_params(n, s);
  require_levels(J, n, "window chains");
  std::vector<std::vector<SpWindowVector>> lists;
  for (int m : J) lists.push_back(enumerate_R_sp(n, s, m));
  std::vector<std::vector<SpWindowVector>> out;
  std::vector<const SpWindowVector*> pick(J.size(), nullptr);
  std::function<void(size_t)> rec = [&](size_t depth) {
    if (depth == J.size()) {
      std::vector<SpWindowVector> chain;
      for (const SpWindowVector* w : pick) chain.push_back(*w);
      out.push_back(chain);
      return;
    }
    for (const SpWindowVector& w : lists[depth]) {
      if (depth > 0 && !window_le(*pick[depth - 1], w)) continue;
      pick[depth] = &w;
      rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

Composition eta(const SpVertex& v) {
  require_sp_vertex(v);
  const long s = v.p.total();
  const long t = (s - 1) / 2;
  const std::vector<int> b = wall_cells(v.p);
  std::vector<int> a(static_cast<size_t>(t) + 1);
  for (long k = 0; k <= t; ++k)
    a[static_cast<size_t>(k)] =
        b[static_cast<size_t>(2 * k)] + b[static_cast<size_t>(2 * k) + 1];
  return Composition{a};
}

SpVertex eta0_inverse(const Composition& a) {
  if (a.length() < 1)
    throw DomainError("base arrangement: block vector must be nonempty");
  for (int x : a.parts)
    if (x < 0) throw DomainError("base arrangement: blocks must be nonnegative");
  const long t = a.length() - 1;
  const long s = 2 * t + 1;
  require_sp_params(a.total(), s);
  std::vector<int> b(static_cast<size_t>(s) + 1, 0);
  for (long k = 0; k <= t; ++k)
    b[static_cast<size_t>(2 * k)] = a.parts[static_cast<size_t>(k)];
  return SpVertex{balls_boxes(b)};
}

SpVertex tau(const Composition& a, const Composition& c) {
  if (a.length() != c.length())
    throw DomainError("fiber pick: block and move vectors must have equal length");
  if (a.length() < 1)
    throw DomainError("fiber pick: block vector must be nonempty");
  for (int x : a.parts)
    if (x < 0) throw DomainError("fiber pick: blocks must be nonnegative");
  const long t = a.length() - 1;
  const long s = 2 * t + 1;
  require_sp_params(a.total(), s);
  std::vector<int> b(static_cast<size_t>(s) + 1, 0);
  for (long k = 0; k <= t; ++k) {
    const int ak = a.parts[static_cast<size_t>(k)];
    const int ck = c.parts[static_cast<size_t>(k)];
    if (ck < 0 || ck > ak)
      throw DomainError("fiber pick: moves must lie within each block");
    b[static_cast<size_t>(2 * k)] = ak - ck;
    b[static_cast<size_t>(2 * k) + 1] = ck;
  }
  return SpVertex{balls_boxes(b)};
}

std::pair<SpVertex, std::vector<int>> theta(const PathTuple& e) {
  if (e.v.empty())
    throw DomainError("step function: path tuple must be nonempty");
  const int boxes = e.v[0].p.length();
  const long s = e.v[0].p.total();
  const int n = boxes - 1;
  std::vector<std::vector<int>> markers;
  for (const SpVertex& v : e.v) {
    if (v.p.length() != boxes || v.p.total() != s)
      throw DomainError("step function: arrangements must share rank and width");
    markers.push_back(vertex_markers(v));
  }
  for (size_t i = 0; i + 1 < markers.size(); ++i)
    if (!std::includes(markers[i + 1].begin(), markers[i + 1].end(),
                       markers[i].begin(), markers[i].end()))
      throw DomainError("step function: marker sets must be nested");
  const int l = static_cast<int>(e.v.size());
  std::vector<int> sigma(static_cast<size_t>(n), l);
  for (int i = l - 1; i >= 0; --i)
    for (int w : markers[static_cast<size_t>(i)]) sigma[static_cast<size_t>(w) - 1] = i;
  return {e.v[0], sigma};
}

IntersectionMatrix zeta(const PathTuple& e) {
  const std::pair<SpVertex, std::vector<int>> step = theta(e);
  const int n = step.first.p.length() - 1;
  const long s = step.first.p.total();
  const long t = (s - 1) / 2;
  const Composition a = eta(step.first);
  std::vector<int> d;
  d.push_back(0);
  for (const SpVertex& v : e.v)
    d.push_back(static_cast<int>(vertex_markers(v).size()));
  d.push_back(n);
  // Wall w belongs to the pooled block holding it in the base arrangement:
  // the blocks are consecutive runs of sizes a_0, a_1, ...
  std::vector<int> block(static_cast<size_t>(n) + 1, 0);
  {
    int w = 1;
    for (int k = 0; k < a.length(); ++k)
      for (int c = 0; c < a.parts[static_cast<size_t>(k)]; ++c)
        block[static_cast<size_t>(w++)] = k;
  }
  std::vector<std::vector<int>> q(
      e.v.size() + 1, std::vector<int>(static_cast<size_t>(t) + 1, 0));
  for (int w = 1; w <= n; ++w)
    ++q[static_cast<size_t>(step.second[static_cast<size_t>(w) - 1])]
      [static_cast<size_t>(block[static_cast<size_t>(w)])];
  return IntersectionMatrix{d, static_cast<int>(t) + 1, q};
}

Int alpha_game(int d, const std::vector<int>& moves) {
  return crossing_game(d, moves, false);
}

Int beta_game(int d, const std::vector<int>& moves) {
  return crossing_game(d, moves, true);
}

Int fiber_count(const IntersectionMatrix& q) {
  Int out(1);
  if (q.q.size() < 3) return out;
  for (size_t i = 1; i + 1 < q.q.size(); ++i)
    for (size_t k = 1; k < q.q[i].size(); ++k) {
      if (q.q[i][k] < 0)
        throw DomainError("fiber count: entries must be nonnegative");
      out *= q.q[i][k] + 1;
    }
  return out;
}

Int gamma_count(int d, int t) {
  if (d < 0 || t < 0)
    throw DomainError("crossing sum: parameters must be nonnegative");
  if (t == 0) return Int(d == 0 ? 1 : 0);
  return binomial(2L * t + d - 1, static_cast<long>(d));
}

Int gamma_count_oracle(int d, int t) {
  if (d < 0 || t < 0)
    throw DomainError("crossing sum: parameters must be nonnegative");
  if (t == 0) return Int(d == 0 ? 1 : 0);
  Int total(0);
  for (const Composition& y : enumerate_compositions(t, d)) {
    Int prod(1);
    for (int x : y.parts) prod *= x + 1;
    total += prod;
  }
  return total;
}

Int euler_sp(int n, long s, const std::vector<int>& J) {
  require_sp_params(n, s);
  require_levels(J, n, "fixed-point count");
  const long t = (s - 1) / 2;
  Int out = binomial(t + J.front(), static_cast<long>(J.front()));
  out *= binomial(t + n - J.back(), static_cast<long>(n - J.back()));
  for (size_t i = 0; i + 1 < J.size(); ++i) {
    const long gap = J[i + 1] - J[i];
    out *= binomial(s + gap - 1, gap);
  }
  return out;
}

Int euler_sp_oracle(int n, long s, const std::vector<int>& J) {
  return Int(enumerate_sp_chains(n, s, J).size());
}

SpSlComparison compare_with_sl(int n, long s, const std::vector<int>& J) {
  SpSlComparison out;
  out.sp = euler_sp(n, s, J);
  std::set<int> folded;
  for (int j : J) {
    folded.insert(j);
    folded.insert(2 * n - j);
  }
  folded.erase(2 * n);
  const ParahoricTypeA type{2 * n, std::vector<int>(folded.begin(), folded.end())};
  out.sl = euler_sl(2 * n, s, type);
  if (out.sp > out.sl)
    throw std::logic_error("special linear comparison: symplectic count exceeded its bound");
  out.equal = (out.sp == out.sl);
  return out;
}

Int springer_euler_sp(const SymplecticPartition& sp, const std::vector<int>& flag_type,
                      long s) {
  require_sp_partition(sp);
  const int n = sp.n();
  const int l = static_cast<int>(sp.parts.size());
  require_sp_params(n, s);
  if (s <= 2 * l)
    throw DomainError("symplectic fiber count: width must exceed twice the part count");
  if (flag_type.empty())
    throw DomainError("symplectic fiber count: flag type must be nonempty");
  for (size_t i = 0; i < flag_type.size(); ++i) {
    if (flag_type[i] < 1 || flag_type[i] > n)
      throw DomainError("symplectic fiber count: flag steps must lie in [1, n]");
    if (i > 0 && flag_type[i] <= flag_type[i - 1])
      throw DomainError("symplectic fiber count: flag steps must be strictly increasing");
  }
  const long t = (s - 1) / 2;
  const Composition a{padded_blocks(sp, t)};
  std::vector<int> d;
  d.push_back(0);
  d.push_back(0);
  for (int mj : flag_type) d.push_back(mj);
  d.push_back(n);
  Int total(0);
  for (const IntersectionMatrix& q :
       enumerate_intersection_matrices(d, static_cast<int>(t) + 1, a))
    total += fiber_count(q);
  return total;
}

Int springer_euler_sp(const SymplecticPartition& sp, const std::vector<int>& flag_type) {
  require_sp_partition(sp);
  long s = 2L * static_cast<long>(sp.parts.size()) + 1;
  while (gcd_long(sp.n(), s) != 1) s += 2;
  return springer_euler_sp(sp, flag_type, s);
}

SpWindowVector sp_base_window(const SymplecticPartition& sp, long s) {
  require_sp_partition(sp);
  const int l = static_cast<int>(sp.parts.size());
  require_sp_params(sp.n(), s);
  if (s <= 2 * l)
    throw DomainError("symplectic base window: width must exceed twice the part count");
  const long t = (s - 1) / 2;
  return window_of_vertex(eta0_inverse(Composition{padded_blocks(sp, t)}));
}

}  // namespace springer

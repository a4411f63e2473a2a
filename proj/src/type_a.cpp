// type_a.cpp
//
// Special linear engine.  The chain enumeration is deliberately naive —
// window vectors are scanned from their defining inequalities, levels are
// validated coordinate by coordinate — so that it can serve as an
// independent oracle for the closed-form count in euler_sl.  The
// step-assignment and intersection-matrix bijections use the dual
// arrangement's anchored cell order: a step function is valid exactly when
// it is nonincreasing along each cell read clockwise, because incrementing
// coordinate t before coordinate t-1 is only legal across a wall of the
// arrangement (a strictly positive first difference of the composition).

#include "springer/type_a.hpp"

#include <algorithm>
#include <stdexcept>

#include "springer/errors.hpp"

namespace springer {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

void require_window(const WindowVector& w) {
  const int n = w.n();
  if (n < 1) throw DomainError("window vector: rank must be positive");
  if (w.s < 1) throw DomainError("window vector: width must be positive");
  if (gcd_long(n, w.s) != 1)
    throw DomainError("window vector: rank and width must be coprime");
  for (int i = 1; i < n; ++i)
    if (w.r[i] < w.r[i - 1])
      throw DomainError("window vector: coordinates must be weakly increasing");
  if (w.r[n - 1] > w.r[0] + w.s)
    throw DomainError("window vector: width exceeded");
}

// Weakly increasing and confined to the width-s window, without assuming
// the vector came from a validated WindowVector.
bool window_ok(const std::vector<long>& v, long s) {
  const int n = static_cast<int>(v.size());
  for (int i = 1; i < n; ++i)
    if (v[i] < v[i - 1]) return false;
  return v[n - 1] <= v[0] + s;
}

// Gap set J = {j_1 < ... < j_l = n} indexing a lattice chain; returns n.
int require_gap_set(const std::vector<int>& J) {
  if (J.empty()) throw DomainError("gap set: must be nonempty");
  if (J.front() < 1) throw DomainError("gap set: entries must be positive");
  for (size_t i = 1; i < J.size(); ++i)
    if (J[i] <= J[i - 1])
      throw DomainError("gap set: entries must be strictly increasing");
  return J.back();
}

// Fiber-size targets of a gap set: consecutive differences anchored at 0.
std::vector<int> gap_sizes(const std::vector<int>& J) {
  std::vector<int> p;
  p.reserve(J.size());
  int prev = 0;
  for (int j : J) {
    p.push_back(j - prev);
    prev = j;
  }
  return p;
}

void require_sigma_shape(const StepAssignment& sig, int n,
                         const std::vector<int>& p) {
  if (static_cast<int>(sig.sigma.size()) != n)
    throw DomainError("step assignment: wrong domain size");
  std::vector<int> fiber(sig.J.size(), 0);
  for (int v : sig.sigma) {
    auto it = std::lower_bound(sig.J.begin(), sig.J.end(), v);
    if (it == sig.J.end() || *it != v)
      throw DomainError("step assignment: value outside the gap set");
    ++fiber[static_cast<size_t>(it - sig.J.begin())];
  }
  for (size_t i = 0; i < p.size(); ++i)
    if (fiber[i] != p[i])
      throw DomainError("step assignment: fiber sizes must match the gaps");
}

}  // namespace

long WindowVector::total() const {
  long t = 0;
  for (long v : r) t += v;
  return t;
}

std::vector<int> ParahoricTypeA::gaps() const {
  if (n < 1) throw DomainError("parahoric type: rank must be positive");
  if (I.empty()) throw DomainError("parahoric type: subset must be nonempty");
  if (I.front() < 0 || I.back() > n - 1)
    throw DomainError("parahoric type: subset must lie in [0, n-1]");
  for (size_t i = 1; i < I.size(); ++i)
    if (I[i] <= I[i - 1])
      throw DomainError("parahoric type: subset must be strictly increasing");
  std::vector<int> p;
  p.reserve(I.size());
  for (size_t i = 0; i + 1 < I.size(); ++i) p.push_back(I[i + 1] - I[i]);
  p.push_back(I.front() + n - I.back());
  return p;
}

bool admissible_sl(int n, long s, const Rat& b) {
  return n >= 1 && s >= 1 && gcd_long(n, s) == 1 && b != 0;
}

void require_admissible_sl(int n, long s, const Rat& b) {
  if (n < 1) throw DomainError("rank must be positive");
  if (s < 1) throw DomainError("width must be positive");
  if (gcd_long(n, s) != 1) throw DomainError("rank and width must be coprime");
  if (b == 0) throw DomainError("corner coefficient must be nonzero");
}

LaurentMatrix standard_rep_sl(int n, long s, const Rat& b) {
  require_admissible_sl(n, s, b);
  CharPoly p;
  p.c.assign(static_cast<size_t>(n) + 1, Laurent::zero());
  p.c[0] = Laurent::one();
  p.c[static_cast<size_t>(n)] = Laurent::monomial(-b, s);
  return companion_rep(p);
}

NuAction nu_sl(int n, long s) {
  require_admissible_sl(n, s, 1);
  NuAction f;
  f.slope = n;
  f.offsets.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) f.offsets[static_cast<size_t>(i)] = -(i + 1) * s;
  return f;
}

namespace {

void scan_windows(int i, long rem, long cap, std::vector<long>& r, long s,
                  std::vector<WindowVector>& out) {
  const int n = static_cast<int>(r.size());
  if (i == n) {
    if (rem == 0) out.push_back(WindowVector{r, s});
    return;
  }
  const long left = n - i - 1;
  for (long v = r[i - 1]; v <= cap; ++v) {
    const long rest = rem - v;
    if (rest < left * v) break;
    if (rest > left * cap) continue;
    r[static_cast<size_t>(i)] = v;
    scan_windows(i + 1, rest, cap, r, s, out);
  }
}

}  // namespace

std::vector<WindowVector> enumerate_R(int n, long s, long m) {
  require_admissible_sl(n, s, 1);
  std::vector<WindowVector> out;
  std::vector<long> r(static_cast<size_t>(n));
  const long lo = ceil_div(m - (n - 1) * s, n);
  const long hi = floor_div(m, n);
  for (long r1 = lo; r1 <= hi; ++r1) {
    r[0] = r1;
    scan_windows(1, m - r1, r1 + s, r, s, out);
  }
  return out;
}

Composition phi(const WindowVector& r) {
  require_window(r);
  const int n = r.n();
  std::vector<int> c(static_cast<size_t>(n));
  c[0] = static_cast<int>(r.r[0] - r.r[static_cast<size_t>(n) - 1] + r.s);
  for (int i = 1; i < n; ++i)
    c[static_cast<size_t>(i)] = static_cast<int>(r.r[static_cast<size_t>(i)] -
                                                 r.r[static_cast<size_t>(i) - 1]);
  return Composition{c};
}

WindowVector phi_inverse(const Composition& c, long m) {
  const int n = c.length();
  if (n < 1) throw DomainError("phi_inverse: empty composition");
  for (int p : c.parts)
    if (p < 0) throw DomainError("phi_inverse: negative part");
  const long s = c.total();
  if (s < 1) throw DomainError("phi_inverse: width must be positive");
  if (gcd_long(n, s) != 1)
    throw DomainError("phi_inverse: rank and width must be coprime");
  long weighted = 0;
  for (int i = 0; i < n; ++i) weighted += static_cast<long>(i + 1) * c.parts[static_cast<size_t>(i)];
  const long num = m - s + weighted;
  if (((num % n) + n) % n != 0)
    throw DomainError("phi_inverse: composition violates the valuation congruence");
  std::vector<long> r(static_cast<size_t>(n));
  r[static_cast<size_t>(n) - 1] = num / n;
  for (int j = n - 1; j >= 1; --j)
    r[static_cast<size_t>(j) - 1] = r[static_cast<size_t>(j)] - c.parts[static_cast<size_t>(j)];
  WindowVector w{r, s};
  require_window(w);
  return w;
}

namespace {

// Depth-first enumeration of step functions with the prescribed fiber
// sizes; each complete assignment is turned into levels and kept only if
// every level is itself a window vector.
void scan_sigmas(size_t t, std::vector<int>& sigma, std::vector<int>& left,
                 const std::vector<int>& J, const WindowVector& r0,
                 std::vector<ChainTuple>& out) {
  const size_t n = sigma.size();
  if (t == n) {
    const size_t l = J.size();
    ChainTuple chain;
    chain.J = J;
    chain.s = r0.s;
    chain.levels.reserve(l);
    chain.levels.push_back(r0.r);
    for (size_t i = 0; i + 1 < l; ++i) {
      std::vector<long> v = r0.r;
      for (size_t u = 0; u < n; ++u)
        if (sigma[u] <= J[i]) ++v[u];
      if (!window_ok(v, r0.s)) return;
      chain.levels.push_back(std::move(v));
    }
    out.push_back(std::move(chain));
    return;
  }
  for (size_t i = 0; i < J.size(); ++i) {
    if (left[i] == 0) continue;
    --left[i];
    sigma[t] = J[i];
    scan_sigmas(t + 1, sigma, left, J, r0, out);
    ++left[i];
  }
}

}  // namespace

std::vector<ChainTuple> enumerate_chains(const std::vector<int>& J, long s, long m) {
  const int n = require_gap_set(J);
  require_admissible_sl(n, s, 1);
  std::vector<int> p = gap_sizes(J);
  std::vector<ChainTuple> out;
  for (const WindowVector& r0 : enumerate_R(n, s, m)) {
    std::vector<int> sigma(static_cast<size_t>(n), 0);
    std::vector<int> left = p;
    scan_sigmas(0, sigma, left, J, r0, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StepAssignment sigma_of_chain(const ChainTuple& chain) {
  const int n = require_gap_set(chain.J);
  const size_t l = chain.J.size();
  if (chain.levels.size() != l)
    throw DomainError("chain: expected one stored level per gap");
  WindowVector base{chain.levels[0], chain.s};
  require_window(base);
  const long m = base.total();
  for (size_t i = 1; i < l; ++i) {
    const std::vector<long>& v = chain.levels[i];
    if (static_cast<int>(v.size()) != n)
      throw DomainError("chain: level has the wrong rank");
    if (!window_ok(v, chain.s))
      throw DomainError("chain: level is not a window vector");
    long total = 0;
    for (size_t u = 0; u < v.size(); ++u) {
      if (v[u] < chain.levels[i - 1][u] || v[u] > chain.levels[0][u] + 1)
        throw DomainError("chain: levels must increase toward the shifted base");
      total += v[u];
    }
    if (total != m + chain.J[i - 1])
      throw DomainError("chain: level has the wrong valuation");
  }
  StepAssignment sig;
  sig.J = chain.J;
  sig.s = chain.s;
  sig.r0 = chain.levels[0];
  sig.sigma.assign(static_cast<size_t>(n), chain.J.back());
  for (size_t u = 0; u < sig.sigma.size(); ++u)
    for (size_t i = 1; i < l; ++i)
      if (chain.levels[i][u] == chain.levels[0][u] + 1) {
        sig.sigma[u] = chain.J[i - 1];
        break;
      }
  return sig;
}

ChainTuple chain_of_sigma(const StepAssignment& sig) {
  const int n = require_gap_set(sig.J);
  WindowVector base{sig.r0, sig.s};
  require_window(base);
  require_sigma_shape(sig, n, gap_sizes(sig.J));
  ChainTuple chain;
  chain.J = sig.J;
  chain.s = sig.s;
  chain.levels.push_back(sig.r0);
  for (size_t i = 0; i + 1 < sig.J.size(); ++i) {
    std::vector<long> v = sig.r0;
    for (int u = 0; u < n; ++u)
      if (sig.sigma[static_cast<size_t>(u)] <= sig.J[i]) ++v[static_cast<size_t>(u)];
    if (!window_ok(v, sig.s))
      throw DomainError("step assignment: a level leaves the window");
    chain.levels.push_back(std::move(v));
  }
  return chain;
}

IntersectionMatrix intersection_matrix_of_sigma(const StepAssignment& sig) {
  chain_of_sigma(sig);  // full validation, including level windows
  const DualArrangement dual = dual_arrangement(phi(WindowVector{sig.r0, sig.s}));
  const size_t l = sig.J.size();
  const int t = static_cast<int>(dual.cells.size());
  IntersectionMatrix q;
  q.d.assign(1, 0);
  q.d.insert(q.d.end(), sig.J.begin(), sig.J.end());
  q.t = t;
  q.q.assign(l, std::vector<int>(static_cast<size_t>(t), 0));
  for (int k = 0; k < t; ++k)
    for (int wall : dual.cells[static_cast<size_t>(k)]) {
      const int v = sig.sigma[static_cast<size_t>(wall) - 1];
      const size_t i = static_cast<size_t>(
          std::lower_bound(sig.J.begin(), sig.J.end(), v) - sig.J.begin());
      ++q.q[i][static_cast<size_t>(k)];
    }
  return q;
}

StepAssignment sigma_of_matrix(const IntersectionMatrix& q,
                               const std::vector<long>& r0, long s) {
  if (q.d.empty() || q.d.front() != 0)
    throw DomainError("intersection matrix: offsets must start at 0");
  std::vector<int> J(q.d.begin() + 1, q.d.end());
  const int n = require_gap_set(J);
  if (static_cast<int>(r0.size()) != n)
    throw DomainError("intersection matrix: base vector has the wrong rank");
  WindowVector base{r0, s};
  require_window(base);
  const DualArrangement dual = dual_arrangement(phi(base));
  if (q.t != static_cast<int>(dual.cells.size()))
    throw DomainError("intersection matrix: wrong number of columns");
  const size_t l = J.size();
  if (q.q.size() != l)
    throw DomainError("intersection matrix: wrong number of rows");
  const std::vector<int> p = gap_sizes(J);
  for (size_t i = 0; i < l; ++i) {
    if (static_cast<int>(q.q[i].size()) != q.t)
      throw DomainError("intersection matrix: ragged rows");
    int sum = 0;
    for (int v : q.q[i]) {
      if (v < 0) throw DomainError("intersection matrix: negative entry");
      sum += v;
    }
    if (sum != p[i])
      throw DomainError("intersection matrix: row sums must match the gaps");
  }
  StepAssignment sig;
  sig.J = J;
  sig.s = s;
  sig.r0 = r0;
  sig.sigma.assign(static_cast<size_t>(n), 0);
  for (size_t k = 0; k < dual.cells.size(); ++k) {
    const std::vector<int>& cell = dual.cells[k];
    int col = 0;
    for (size_t i = 0; i < l; ++i) col += q.q[i][k];
    if (col != static_cast<int>(cell.size()))
      throw DomainError("intersection matrix: column sums must match the cell sizes");
    size_t pos = 0;
    for (size_t i = l; i-- > 0;)
      for (int cnt = 0; cnt < q.q[i][k]; ++cnt)
        sig.sigma[static_cast<size_t>(cell[pos++]) - 1] = J[i];
  }
  return sig;
}

std::vector<IntersectionMatrix> enumerate_intersection_matrices(
    const std::vector<int>& d, int t, const std::optional<Composition>& col_sums) {
  if (t < 1) throw DomainError("intersection matrices: need at least one column");
  if (d.empty()) throw DomainError("intersection matrices: empty offset sequence");
  for (size_t i = 1; i < d.size(); ++i)
    if (d[i] < d[i - 1])
      throw DomainError("intersection matrices: offsets must be nondecreasing");
  if (col_sums) {
    if (col_sums->length() != t)
      throw DomainError("intersection matrices: column-sum filter has the wrong length");
    for (int v : col_sums->parts)
      if (v < 0) throw DomainError("intersection matrices: negative column sum");
  }
  const size_t l = d.size() - 1;
  std::vector<std::vector<Composition>> rows(l);
  for (size_t i = 0; i < l; ++i)
    rows[i] = enumerate_compositions(t, d[i + 1] - d[i]);

  std::vector<IntersectionMatrix> out;
  IntersectionMatrix cur;
  cur.d = d;
  cur.t = t;
  cur.q.assign(l, {});
  std::vector<int> col(static_cast<size_t>(t), 0);

  // Row-major depth-first product; pruned against the column filter so the
  // unfiltered walk is plain lexicographic.
  auto emit = [&](auto&& self, size_t i) -> void {
    if (i == l) {
      if (col_sums && !(Composition{col} == *col_sums)) return;
      out.push_back(cur);
      return;
    }
    for (const Composition& row : rows[i]) {
      bool feasible = true;
      if (col_sums)
        for (int k = 0; k < t && feasible; ++k)
          if (col[static_cast<size_t>(k)] + row.parts[static_cast<size_t>(k)] >
              col_sums->parts[static_cast<size_t>(k)])
            feasible = false;
      if (!feasible) continue;
      for (int k = 0; k < t; ++k) col[static_cast<size_t>(k)] += row.parts[static_cast<size_t>(k)];
      cur.q[i] = row.parts;
      self(self, i + 1);
      for (int k = 0; k < t; ++k) col[static_cast<size_t>(k)] -= row.parts[static_cast<size_t>(k)];
    }
  };
  emit(emit, 0);
  return out;
}

Int count_intersection_matrices(const std::vector<int>& d, int t) {
  if (t < 1) throw DomainError("intersection matrices: need at least one column");
  if (d.empty()) throw DomainError("intersection matrices: empty offset sequence");
  for (size_t i = 1; i < d.size(); ++i)
    if (d[i] < d[i - 1])
      throw DomainError("intersection matrices: offsets must be nondecreasing");
  Int total = 1;
  for (size_t i = 1; i < d.size(); ++i)
    total *= count_compositions(t, d[i] - d[i - 1]);
  return total;
}

Int euler_sl(int n, long s, const ParahoricTypeA& type) {
  require_admissible_sl(n, s, 1);
  if (type.n != n) throw DomainError("parahoric type: rank mismatch");
  Int prod = 1;
  for (int p : type.gaps()) prod *= binomial(s + p - 1, p);
  if (prod % s != 0)
    throw std::logic_error("euler_sl: closed form failed to divide by the width");
  return prod / s;
}

Int euler_sl_oracle(int n, long s, const ParahoricTypeA& type) {
  require_admissible_sl(n, s, 1);
  if (type.n != n) throw DomainError("parahoric type: rank mismatch");
  type.gaps();  // validates the subset
  std::vector<int> J;
  J.reserve(type.I.size());
  for (size_t i = 1; i < type.I.size(); ++i) J.push_back(type.I[i] - type.I[0]);
  J.push_back(n);
  return Int(enumerate_chains(J, s, 0).size());
}

Partition jordan_type_of_window(const WindowVector& r) {
  const Composition sizes = dual_arrangement(phi(r)).sizes();
  Partition parts;
  for (int b : sizes.parts)
    if (b > 0) parts.push_back(b);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

namespace {

int require_partition(const Partition& parts) {
  if (parts.empty()) throw DomainError("partition: must be nonempty");
  int n = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw DomainError("partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw DomainError("partition: parts must be nonincreasing");
    n += parts[i];
  }
  return n;
}

}  // namespace

Int springer_euler_sl(const Partition& parts, const std::vector<int>& flag_type) {
  const int n = require_partition(parts);
  long s = static_cast<long>(parts.size()) + 1;
  while (gcd_long(n, s) != 1) ++s;
  return springer_euler_sl(parts, flag_type, s);
}

Int springer_euler_sl(const Partition& parts, const std::vector<int>& flag_type,
                      long s) {
  const int n = require_partition(parts);
  const int t = static_cast<int>(parts.size());
  if (s < t)
    throw DomainError("springer: width must be at least the number of parts");
  if (gcd_long(n, s) != 1)
    throw DomainError("springer: width must be coprime to the rank");
  for (size_t i = 0; i < flag_type.size(); ++i) {
    if (flag_type[i] < 1 || flag_type[i] > n - 1)
      throw DomainError("springer: flag type must lie in [1, n-1]");
    if (i > 0 && flag_type[i] <= flag_type[i - 1])
      throw DomainError("springer: flag type must be strictly increasing");
  }
  std::vector<int> d;
  d.reserve(flag_type.size() + 2);
  d.push_back(0);
  d.insert(d.end(), flag_type.begin(), flag_type.end());
  d.push_back(n);
  std::vector<int> b(static_cast<size_t>(s), 0);
  for (int i = 0; i < t; ++i) b[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)];
  return Int(enumerate_intersection_matrices(d, static_cast<int>(s), Composition{b}).size());
}

}  // namespace springer

#include "springer/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace springer {

namespace {

// Hard cap on the number of objects any exhaustive enumeration is allowed to
// materialize.  Desk-scale parameters stay far below this; the cap turns a
// runaway CLI request into a clean error instead of an OOM.
constexpr long kEnumerationCap = 5'000'000;

}  // namespace

int Composition::total() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Composition DualArrangement::sizes() const {
  Composition b;
  b.parts.reserve(cells.size());
  for (const auto& cell : cells) b.parts.push_back(static_cast<int>(cell.size()));
  return b;
}

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int binomial(const Int& a, const Int& b) {
  if (a < 0) throw DomainError("binomial: upper argument must be nonnegative");
  if (b < 0 || b > a) return 0;
  Int k = b;
  if (a - b < k) k = a - b;
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    result *= (a - k + i);
    result /= i;  // exact at every step: result is binomial(a-k+i, i)
  }
  return result;
}

Int binomial(long a, long b) { return binomial(Int(a), Int(b)); }

Int multinomial(const std::vector<int>& ks) {
  long total = 0;
  Int result = 1;
  for (int k : ks) {
    if (k < 0) throw DomainError("multinomial: parts must be nonnegative");
    total += k;
    result *= binomial(Int(total), Int(k));
  }
  return result;
}

Int count_compositions(long t, long d) {
  if (t < 1) throw DomainError("compositions: length must be >= 1");
  if (d < 0) return 0;
  return binomial(Int(t + d - 1), Int(d));
}

std::vector<Composition> enumerate_compositions(int t, int d) {
  if (t < 1) throw DomainError("compositions: length must be >= 1");
  if (d < 0) throw DomainError("compositions: total must be >= 0");
  Int count = count_compositions(t, d);
  if (count > kEnumerationCap)
    throw DomainError("compositions: C(" + std::to_string(t + d - 1) + "," +
                      std::to_string(d) + ") objects exceed the enumeration cap");

  std::vector<Composition> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> parts(t, 0);
  // Depth-first with the leading part ascending gives lexicographic order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == t - 1) {
      parts[pos] = remaining;
      out.push_back(Composition{parts});
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

Composition min_rotation(const Composition& c) {
  const int t = c.length();
  if (t == 0) return c;
  Composition best = c;
  std::vector<int> rot(c.parts.begin(), c.parts.end());
  for (int k = 1; k < t; ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best.parts) best.parts = rot;
  }
  return best;
}

int rotation_period(const Composition& c) {
  const int t = c.length();
  if (t == 0) return 0;
  std::vector<int> rot(c.parts.begin(), c.parts.end());
  for (int k = 1; k < t; ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot == c.parts) return k;
  }
  return t;
}

std::vector<CyclicClass> cyclic_classes(int t, int d) {
  if (t < 1) throw DomainError("cyclic classes: length must be >= 1");
  std::set<std::vector<int>> seen;
  std::vector<CyclicClass> out;
  for (const Composition& c : enumerate_compositions(t, d)) {
    Composition rep = min_rotation(c);
    if (seen.insert(rep.parts).second)
      out.push_back(CyclicClass{rep, rotation_period(rep)});
  }
  std::sort(out.begin(), out.end(), [](const CyclicClass& a, const CyclicClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

DualArrangement dual_arrangement(const Composition& c) {
  const int n = c.length();
  const int s = c.total();
  if (n < 1) throw DomainError("dual arrangement: need at least one box");
  if (s < 1) throw DomainError("dual arrangement: need at least one ball");
  if (gcd_long(n, s) != 1)
    throw DomainError("dual arrangement: gcd(n, s) != 1");
  for (int p : c.parts)
    if (p < 0) throw DomainError("dual arrangement: negative part");

  // Circular sequence, clockwise: the c_t balls of box t followed by wall t
  // (so box t sits between walls t-1 and t; wall 0 = wall n is the final
  // element and the circle closes back to box 1).
  // Entries: wall label in [1, n], or 0 for a ball.
  const int len = n + s;
  std::vector<int> seq;
  seq.reserve(len);
  std::vector<int> ball_at;  // clockwise positions of balls, unanchored
  int wall1_pos = -1;
  for (int t = 1; t <= n; ++t) {
    for (int b = 0; b < c.parts[t - 1]; ++b) {
      ball_at.push_back(static_cast<int>(seq.size()));
      seq.push_back(0);
    }
    if (t == 1) wall1_pos = static_cast<int>(seq.size());
    seq.push_back(t);
  }

  // Ball 1 = first ball counterclockwise of wall 1.
  int pos = wall1_pos;
  while (true) {
    pos = (pos - 1 + len) % len;
    if (seq[pos] == 0) break;
  }
  // Rotate the ball position list so ball_at[0] is ball 1, keeping the
  // clockwise (increasing position) cyclic order.
  auto it = std::find(ball_at.begin(), ball_at.end(), pos);
  std::rotate(ball_at.begin(), it, ball_at.end());

  // Cell k = walls strictly between ball k-1 and ball k, clockwise
  // (ball 0 = ball s).
  DualArrangement dual;
  dual.cells.assign(s, {});
  for (int k = 1; k <= s; ++k) {
    int from = ball_at[(k - 2 + s) % s];  // ball k-1
    int to = ball_at[k - 1];              // ball k
    for (int p = (from + 1) % len; p != to; p = (p + 1) % len)
      if (seq[p] != 0) dual.cells[k - 1].push_back(seq[p]);
  }
  return dual;
}

}  // namespace springer

#include "springer/lattice.hpp"

#include <algorithm>
#include <limits>

namespace springer {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

long lo_bound(const Laurent& x) {
  if (auto v = x.valuation()) return *v;
  if (auto p = x.precision()) return *p;
  return kInf;
}

// One triangularization/reduction attempt at working precision cap.  Fills
// out and returns true, or returns false when a window was too narrow to
// certify the result (the caller may retry with a wider cap when the input
// is exact).  Throws for conditions no retry can fix.
bool reduce_attempt(const LaurentMatrix& b, long shift, long cap, bool input_exact,
                    CanonicalBasis& out) {
  const int n = b.n;
  LaurentMatrix w(n);
  for (size_t i = 0; i < b.e.size(); ++i) w.e[i] = b.e[i].shifted(-shift).truncated(cap);
  std::vector<long> r(n, 0);

  // Phase 1: bottom-up triangularization by A-unimodular column operations.
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    long bv = kInf;
    for (int c = 0; c <= i; ++c) {
      auto v = w.at(i, c).valuation();
      if (v && *v < bv) {
        bv = *v;
        best = c;
      }
    }
    if (best < 0) {
      // Nonsingularity was established from the determinant up front, so a
      // fully blank pivot row is a precision shortfall, not singularity.
      if (input_exact) return false;
      throw PrecisionError("canonical basis: pivot row unresolved within precision");
    }
    // A blank-so-far entry with a window at or below the visible minimum
    // could hide a smaller pivot.
    for (int c = 0; c <= i; ++c) {
      const Laurent& x = w.at(i, c);
      if (!x.valuation() && !x.exact() && *x.precision() <= bv)
        return false;
    }
    for (int row = 0; row < n; ++row) std::swap(w.at(row, best), w.at(row, i));
    r[i] = bv;
    Laurent uinv = w.at(i, i).shifted(-bv).inverse(cap);
    for (int row = 0; row < n; ++row) w.at(row, i) = w.at(row, i) * uinv;
    for (int c = 0; c < i; ++c) {
      // A blank-but-truncated quotient still subtracts: its hidden part
      // must degrade the windows it touches.
      Laurent q = w.at(i, c).shifted(-bv);
      if (q.is_exact_zero()) continue;
      for (int row = 0; row <= i; ++row) w.at(row, c) -= q * w.at(row, i);
    }
  }

  // Phase 2: reduce above-diagonal entries modulo pi^{r_row}.  The quotient
  // keeps the entry's window so hidden high terms degrade soundly.
  for (int i = n - 1; i >= 0; --i)
    for (int c = i + 1; c < n; ++c) {
      const Laurent& x = w.at(i, c);
      Laurent low;
      for (const auto& [e, co] : x.terms())
        if (e < r[i]) low += Laurent::monomial(co, e);
      Laurent high = x - low;
      if (high.is_exact_zero()) continue;
      Laurent q = high.shifted(-r[i]);
      for (int row = 0; row <= i; ++row) w.at(row, c) -= q * w.at(row, i);
    }

  // Certify windows and emit the exact form.  The true canonical basis has
  // exact zeros below the diagonal and pi^{r_j} on it; above the diagonal
  // all true terms lie below r_row, so a window reaching r_row shows them
  // all.
  out = CanonicalBasis{n, r, LaurentMatrix(n)};
  for (int j = 0; j < n; ++j) {
    out.r[j] += shift;
    out.z.at(j, j) = Laurent::pi(r[j] + shift);
    for (int i = 0; i < j; ++i) {
      const Laurent& x = w.at(i, j);
      if (!x.exact() && *x.precision() < r[i]) return false;
      Laurent cell;
      for (const auto& [e, co] : x.terms()) cell += Laurent::monomial(co, e + shift);
      out.z.at(i, j) = cell;
    }
    for (int i = j + 1; i < n; ++i)
      if (!w.at(i, j).terms().empty())
        throw std::logic_error("canonical basis: below-diagonal residue");
  }
  return true;
}

}  // namespace

CanonicalBasis canonical_basis(const LaurentMatrix& b) {
  const int n = b.n;
  if (n == 0) return CanonicalBasis{};

  bool input_exact = true;
  long k1 = kInf;
  for (const Laurent& x : b.e) {
    input_exact = input_exact && x.exact();
    k1 = std::min(k1, lo_bound(x));
  }
  Laurent d = det(b);
  if (d.is_exact_zero()) throw DomainError("canonical basis: singular basis matrix");
  if (!d.valuation())
    throw PrecisionError("canonical basis: determinant unresolved within precision");
  const long dshift = *d.valuation() - n * k1;  // valuation of the pi^{-k1}-scaled lattice

  CanonicalBasis out;
  long cap = 2 * dshift + 2;
  for (int attempt = 0; attempt < 8; ++attempt, cap *= 2) {
    if (reduce_attempt(b, k1, cap, input_exact, out)) return out;
    if (!input_exact)
      throw PrecisionError("canonical basis: input precision cannot certify the reduction");
  }
  throw std::logic_error("canonical basis: working precision did not converge");
}

CanonicalBasis canonical_basis(const DiagonalLattice& d) {
  const int n = d.dim();
  CanonicalBasis out{n, d.r, LaurentMatrix(n)};
  for (int j = 0; j < n; ++j) out.z.at(j, j) = Laurent::pi(d.r[j]);
  return out;
}

long valuation(const CanonicalBasis& l) {
  long s = 0;
  for (long x : l.r) s += x;
  return s;
}

long valuation(const LaurentMatrix& b) {
  Laurent d = det(b);
  if (d.is_exact_zero()) throw DomainError("lattice valuation: singular basis matrix");
  if (!d.valuation())
    throw PrecisionError("lattice valuation: determinant unresolved within precision");
  return *d.valuation();
}

CanonicalBasis shifted_lattice(const CanonicalBasis& l, long a) {
  CanonicalBasis out = l;
  for (long& x : out.r) x += a;
  for (Laurent& x : out.z.e) x = x.shifted(a);
  return out;
}

bool contains(const CanonicalBasis& l, const std::vector<Laurent>& v) {
  if (static_cast<int>(v.size()) != l.n)
    throw DomainError("lattice membership: dimension mismatch");
  std::vector<Laurent> w = v;
  for (int j = l.n - 1; j >= 0; --j) {
    const Laurent& cj = w[j];
    if (cj.is_exact_zero()) continue;
    if (!cj.valuation()) {
      if (*cj.precision() < l.r[j])
        throw PrecisionError("lattice membership: coordinate unresolved within precision");
    } else if (*cj.valuation() < l.r[j]) {
      return false;
    }
    Laurent q = cj.shifted(-l.r[j]);  // in A (or A-so-far within its window)
    for (int row = 0; row <= j; ++row) w[row] -= q * l.z.at(row, j);
  }
  return true;
}

bool contains(const CanonicalBasis& l, const CanonicalBasis& m) {
  if (l.n != m.n) throw DomainError("lattice inclusion: dimension mismatch");
  for (int j = 0; j < m.n; ++j) {
    std::vector<Laurent> col(m.n);
    for (int i = 0; i < m.n; ++i) col[i] = m.z.at(i, j);
    if (!contains(l, col)) return false;
  }
  return true;
}

bool stabilizes(const LaurentMatrix& nmat, const DiagonalLattice& d) {
  if (nmat.n != d.dim()) throw DomainError("stability: dimension mismatch");
  for (int j = 0; j < nmat.n; ++j)
    for (int i = 0; i < nmat.n; ++i) {
      const Laurent& x = nmat.at(j, i);  // coefficient of e_j in N e_i
      if (x.is_exact_zero()) continue;
      if (auto v = x.valuation()) {
        if (*v + d.r[i] < d.r[j]) return false;
      } else if (*x.precision() + d.r[i] < d.r[j]) {
        throw PrecisionError("stability: entry unresolved within precision");
      }
    }
  return true;
}

bool stabilizes(const LaurentMatrix& nmat, const CanonicalBasis& l) {
  if (nmat.n != l.n) throw DomainError("stability: dimension mismatch");
  for (int j = 0; j < l.n; ++j) {
    std::vector<Laurent> img(l.n);
    for (int i = 0; i < l.n; ++i) {
      Laurent acc;
      for (int k = 0; k < l.n; ++k) acc += nmat.at(i, k) * l.z.at(k, j);
      img[i] = acc;
    }
    if (!contains(l, img)) return false;
  }
  return true;
}

LaurentMatrix standard_symplectic_gram(int n) {
  LaurentMatrix j(2 * n);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = Laurent::one();
    j.at(n + i, i) = Laurent::monomial(-1, 0);
  }
  return j;
}

CanonicalBasis dual(const CanonicalBasis& l) {
  if (l.n % 2 != 0) throw DomainError("symplectic dual: dimension must be even");
  const int n = l.n;
  // x in L* iff B^T J x has A-entries, so L* = (B^T J)^{-1} A^n.  Replacing
  // the inverse by adj(B^T J) pi^{-v(det)} changes the basis by a unit of A
  // and a scalar unit, neither of which moves the A-span.
  LaurentMatrix m = l.z.transpose() * standard_symplectic_gram(n / 2);
  Laurent d = det(m);
  if (!d.valuation()) throw DomainError("symplectic dual: singular basis");
  const long dv = *d.valuation();  // = valuation(l): det(J) is 1
  LaurentMatrix basis(n);
  LaurentMatrix minor(n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Laurent cof = det(minor);
      basis.at(j, i) = ((((i + j) & 1) == 0) ? cof : -cof).shifted(-dv);
    }
  return canonical_basis(basis);
}

bool is_symplectic(const CanonicalBasis& l) {
  const long v = valuation(l);
  const long dim = l.n;
  // c = ceil(2v / dim): the single shift the valuations leave possible for
  // pi^c L* (subset) L (subset) pi^{c-1} L*.
  long c = (2 * v >= 0) ? (2 * v + dim - 1) / dim : -((-2 * v) / dim);
  CanonicalBasis star = dual(l);
  return contains(l, shifted_lattice(star, c)) && contains(shifted_lattice(star, c - 1), l);
}

bool is_fixed(const NuAction& f, const CanonicalBasis& l) {
  if (f.dim() != l.n) throw DomainError("fixed-point test: dimension mismatch");
  for (int j = 0; j < l.n; ++j) {
    std::optional<long> grade;
    for (int i = 0; i <= j; ++i)
      for (const auto& [m, co] : l.z.at(i, j).terms()) {
        long g = f.exponent(m, i);
        if (grade && *grade != g) return false;
        grade = g;
      }
  }
  return true;
}

DiagonalLattice flow_limit(const NuAction& f, const CanonicalBasis& l) {
  if (f.dim() != l.n) throw DomainError("flow limit: dimension mismatch");
  for (int j = 0; j < l.n; ++j) {
    const long g0 = f.exponent(l.r[j], j);
    for (int i = 0; i < j; ++i)
      for (const auto& [m, co] : l.z.at(i, j).terms())
        if (f.exponent(m, i) - g0 <= 0)
          throw DomainError("flow limit: lattice is not in the attracting cell of this action");
  }
  return DiagonalLattice{l.r};
}

bool verify_almost_commute(const LaurentMatrix& nmat, const NuAction& f, long s) {
  if (nmat.n != f.dim()) throw DomainError("almost-commutation: dimension mismatch");
  for (int i = 0; i < nmat.n; ++i)
    for (int j = 0; j < nmat.n; ++j)
      for (const auto& [l, co] : nmat.at(i, j).terms())
        if (f.slope * l + f.offsets[i] - f.offsets[j] != s) return false;
  return true;
}

ScalarMatrix induced_endomorphism(const LaurentMatrix& nmat, const DiagonalLattice& d) {
  if (!stabilizes(nmat, d))
    throw DomainError("induced endomorphism: operator does not stabilize the lattice");
  const int n = nmat.n;
  ScalarMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m[j][i] = nmat.at(j, i).coeff(d.r[j] - d.r[i]);
  return m;
}

int rank(ScalarMatrix m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    for (int r = rk + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rk][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rk][k];
    }
    ++rk;
  }
  return rk;
}

Partition jordan_type(const ScalarMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw DomainError("jordan type: matrix not square");
  std::vector<int> ranks{n};  // rank(M^0), rank(M^1), ...
  ScalarMatrix pw = m;
  for (int k = 1; k <= n && ranks.back() > 0; ++k) {
    ranks.push_back(rank(pw));
    if (ranks.back() > 0) {
      // pw <- pw * m
      ScalarMatrix nx(n, std::vector<Rat>(n, Rat(0)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rat acc(0);
          for (int t = 0; t < n; ++t) acc += pw[i][t] * m[t][j];
          nx[i][j] = acc;
        }
      pw = std::move(nx);
    }
  }
  if (ranks.back() != 0) throw DomainError("jordan type: matrix is not nilpotent");
  Partition parts;
  const int kmax = static_cast<int>(ranks.size()) - 1;
  for (int j = kmax; j >= 1; --j) {
    int dj = ranks[j - 1] - ranks[j];
    int dj1 = (j + 1 <= kmax) ? ranks[j] - ranks[j + 1] : 0;
    for (int t = 0; t < dj - dj1; ++t) parts.push_back(j);
  }
  return parts;
}

}  // namespace springer

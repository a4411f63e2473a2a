// laurent.hpp
//
// Exact arithmetic in k((pi)) — Laurent series in a uniformizer pi with
// rational coefficients — together with square matrices over it,
// division-free characteristic polynomials, the homogeneity classification
// of such polynomials, and Newton-polygon root valuations.
//
// Precision model.  A Laurent value is either *exact* (a genuine Laurent
// polynomial, known to all orders) or *truncated*: correct modulo pi^prec
// for an explicitly stored prec.  Arithmetic computes the tightest sound
// output precision (e.g. multiplying something known mod pi^p by something
// of valuation v yields knowledge mod pi^(p+v)) and operations that cannot
// resolve their answer within the window throw PrecisionError instead of
// silently truncating.  Stored coefficients are never zero and never at or
// above the truncation order.
//
// The coefficient field is the exact rationals; every identity verified
// downstream (characteristic polynomials, commutation laws, lattice
// stability) is a polynomial identity with rational data, so nothing is
// lost relative to an algebraically closed coefficient field, and the
// characteristic-of-k side conditions are vacuous.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "springer/bigint.hpp"
#include "springer/errors.hpp"

namespace springer {

class Laurent {
 public:
  // Exact zero.
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(1, 0); }
  static Laurent pi(long e = 1) { return monomial(1, e); }
  static Laurent monomial(const Rat& coeff, long e);
  static Laurent rational(const Rat& r) { return monomial(r, 0); }
  // Zero known only modulo pi^prec.
  static Laurent zero_mod(long prec);

  bool exact() const { return !prec_.has_value(); }
  std::optional<long> precision() const { return prec_; }
  const std::map<long, Rat>& terms() const { return terms_; }

  // True when the value is literally zero (exact, no terms); a truncated
  // value with no stored terms is only "zero as far as is known".
  bool is_exact_zero() const { return exact() && terms_.empty(); }

  // Valuation of the known nonzero part; nullopt when no nonzero term is
  // known (exact zero, or truncated zero-so-far).
  std::optional<long> valuation() const;

  // Coefficient of pi^e.  Throws PrecisionError when e lies at or beyond the
  // truncation order (the coefficient there is simply not known).
  Rat coeff(long e) const;

  // Copy truncated to precision p (no-op if already at least as coarse).
  Laurent truncated(long p) const;
  // Multiplication by pi^e (exactness preserved).
  Laurent shifted(long e) const;

  // Multiplicative inverse, correct modulo pi^result_prec (capped by what
  // the operand's own precision supports).  Exact monomials invert exactly
  // regardless of result_prec.  Throws PrecisionError when no nonzero
  // leading term is known or the answer would contain no known term.
  Laurent inverse(long result_prec) const;

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Structural equality: identical terms and identical precision marker.
  bool operator==(const Laurent& o) const {
    return prec_ == o.prec_ && terms_ == o.terms_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Human-readable form, e.g. "1 - 3/2*pi^2 + O(pi^5)".
  std::string str() const;
  // Sparse machine form: space-separated "exponent:numerator/denominator"
  // tokens in ascending exponent order ("/denominator" omitted when 1),
  // followed by "O:prec" when truncated; "0" when there are no terms.
  std::string tokens() const;
  static Laurent parse(const std::string& text);

 private:
  void normalize();

  std::map<long, Rat> terms_;
  std::optional<long> prec_;
};

// Square matrix over Laurent scalars, row-major, 0-based accessors.
// Matrix-level helpers preserve the scalar precision discipline.
struct LaurentMatrix {
  int n = 0;
  std::vector<Laurent> e;

  LaurentMatrix() = default;
  explicit LaurentMatrix(int dim) : n(dim), e(static_cast<size_t>(dim) * dim) {}

  Laurent& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
  const Laurent& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

  static LaurentMatrix identity(int dim);
  LaurentMatrix transpose() const;

  bool operator==(const LaurentMatrix& o) const { return n == o.n && e == o.e; }
};

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix scale(const Laurent& c, const LaurentMatrix& m);

// Division-free determinant (dynamic programming over column subsets).
Laurent det(const LaurentMatrix& m);

// Inverse via exact adjugate divided by the determinant; the result is
// correct modulo pi^result_prec (exactly invertible determinants — monomials
// — give exact results).  Throws PrecisionError when the determinant's
// leading term cannot be resolved, DomainError when it is exactly zero.
LaurentMatrix inverse(const LaurentMatrix& m, long result_prec);

// Monic characteristic polynomial sum_{i=0..n} c[i] mu^(n-i), c[0] = 1,
// computed by division-free expansion of det(mu*I - M).
struct CharPoly {
  std::vector<Laurent> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
};

CharPoly char_poly(const LaurentMatrix& m);

// Homogeneity classification: a characteristic polynomial is homogeneous of
// index q when every nonzero coefficient c_i (i >= 1) is a single monomial
// of valuation q*i for one common rational q.  Nilpotent polynomials (all
// c_i = 0 for i >= 1) are degenerate: any q works.
struct HomogeneityIndex {
  enum class Kind { absent, any, value };
  Kind kind = Kind::absent;
  Rat q;  // meaningful only when kind == value

  bool present() const { return kind != Kind::absent; }
};

HomogeneityIndex homogeneity_index(const CharPoly& p);

// Valuations of the nonzero roots with multiplicities, read off the lower
// Newton polygon of the coefficient valuations; ascending by valuation.
std::vector<std::pair<Rat, int>> newton_slopes(const CharPoly& p);

// For a homogeneous polynomial of index q with nonzero constant term, all
// roots have valuation exactly q; returns q after confirming it against the
// Newton polygon.  Throws DomainError when the preconditions fail.
Rat eigen_valuations(const CharPoly& p);

// Companion-style matrix with the given characteristic polynomial: ones on
// the superdiagonal and -c_i down the first column.  Requires every nonzero
// c_i (i >= 1) to be an exact monomial (the homogeneous shape); then
// char_poly(companion_rep(p)) == p.
LaurentMatrix companion_rep(const CharPoly& p);

}  // namespace springer

#include "springer/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace springer {

namespace {

// Internal stand-in for "+infinity" precision, safely away from overflow.
constexpr long kInf = std::numeric_limits<long>::max() / 4;

// Sound lower bound for the valuation of x: the first known term, the
// truncation order when nothing is known below it, +inf for exact zero.
long lo_bound(const Laurent& x) {
  if (auto v = x.valuation()) return *v;
  if (auto p = x.precision()) return *p;
  return kInf;
}

constexpr int kMaxDim = 16;

}  // namespace

void Laurent::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || (prec_ && it->first >= *prec_))
      it = terms_.erase(it);
    else
      ++it;
  }
}

Laurent Laurent::monomial(const Rat& coeff, long e) {
  Laurent x;
  if (coeff != 0) x.terms_[e] = coeff;
  return x;
}

Laurent Laurent::zero_mod(long prec) {
  Laurent x;
  x.prec_ = prec;
  return x;
}

std::optional<long> Laurent::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rat Laurent::coeff(long e) const {
  if (prec_ && e >= *prec_)
    throw PrecisionError("coefficient of pi^" + std::to_string(e) +
                         " lies beyond the precision window O(pi^" +
                         std::to_string(*prec_) + ")");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Laurent Laurent::truncated(long p) const {
  Laurent x = *this;
  x.prec_ = x.prec_ ? std::min(*x.prec_, p) : p;
  x.normalize();
  return x;
}

Laurent Laurent::shifted(long e) const {
  Laurent x;
  for (const auto& [k, v] : terms_) x.terms_[k + e] = v;
  if (prec_) x.prec_ = *prec_ + e;
  return x;
}

Laurent Laurent::operator-() const {
  Laurent x = *this;
  for (auto& [k, v] : x.terms_) v = -v;
  return x;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent x = a;
  for (const auto& [k, v] : b.terms_) x.terms_[k] += v;
  if (a.prec_ || b.prec_)
    x.prec_ = std::min(a.prec_.value_or(kInf), b.prec_.value_or(kInf));
  x.normalize();
  return x;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return Laurent();
  long prec = kInf;
  if (a.prec_) prec = std::min(prec, *a.prec_ + lo_bound(b));
  if (b.prec_) prec = std::min(prec, *b.prec_ + lo_bound(a));
  Laurent x;
  if (prec < kInf) x.prec_ = prec;
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      if (ka + kb >= prec) continue;
      x.terms_[ka + kb] += va * vb;
    }
  x.normalize();
  return x;
}

Laurent Laurent::inverse(long result_prec) const {
  // Exact monomials invert exactly.
  if (exact() && terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    return monomial(Rat(1) / c, -e);
  }
  auto v = valuation();
  if (!v)
    throw PrecisionError(exact() ? "inverse of zero"
                                 : "inverse: no nonzero term resolved within precision");
  const long v0 = *v;
  const Rat a0 = terms_.begin()->second;
  const long cap = prec_ ? *prec_ - 2 * v0 : kInf;
  const long rp = std::min(result_prec, cap);
  if (rp <= -v0)
    throw PrecisionError("inverse: requested/attainable precision resolves no term");
  const long K = rp + v0;  // relative precision of the unit part, K >= 1

  Laurent u = (shifted(-v0) * monomial(Rat(1) / a0, 0)).truncated(K);
  Laurent w = one() - u;  // valuation >= 1
  Laurent acc = one().truncated(K);
  Laurent pw = one();
  for (long k = 1; k <= K; ++k) {
    pw = (pw * w).truncated(K);
    if (pw.terms().empty()) break;
    acc += pw;
  }
  return (acc.shifted(-v0) * monomial(Rat(1) / a0, 0)).truncated(rp);
}

std::string Laurent::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool unit_coeff = (a == 1 && e != 0);
    if (!unit_coeff) out << a;
    if (e != 0) {
      if (!unit_coeff) out << "*";
      out << "pi";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  if (first && !prec_) out << "0";
  if (prec_) {
    if (!first) out << " + ";
    out << "O(pi^" << *prec_ << ")";
  }
  return out.str();
}

std::string Laurent::tokens() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " ";
    out << e << ":" << boost::multiprecision::numerator(c);
    if (boost::multiprecision::denominator(c) != 1)
      out << "/" << boost::multiprecision::denominator(c);
    first = false;
  }
  if (first) {
    out << "0";
    first = false;
  }
  if (prec_) out << " O:" << *prec_;
  return out.str();
}

Laurent Laurent::parse(const std::string& text) {
  Laurent x;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "0") continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw DomainError("laurent parse: malformed token '" + tok + "'");
    std::string head = tok.substr(0, colon);
    std::string tail = tok.substr(colon + 1);
    try {
      if (head == "O") {
        x.prec_ = std::stol(tail);
      } else {
        long e = std::stol(head);
        Rat c;
        auto slash = tail.find('/');
        if (slash == std::string::npos)
          c = Rat(Int(tail));
        else
          c = Rat(Int(tail.substr(0, slash)), Int(tail.substr(slash + 1)));
        x.terms_[e] += c;
      }
    } catch (const std::exception&) {
      throw DomainError("laurent parse: malformed token '" + tok + "'");
    }
  }
  x.normalize();
  return x;
}

LaurentMatrix LaurentMatrix::identity(int dim) {
  LaurentMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Laurent::one();
  return m;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(j, i) = at(i, j);
  return m;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n != b.n) throw DomainError("matrix add: dimension mismatch");
  LaurentMatrix m(a.n);
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = a.e[i] + b.e[i];
  return m;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n != b.n) throw DomainError("matrix sub: dimension mismatch");
  LaurentMatrix m(a.n);
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = a.e[i] - b.e[i];
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n != b.n) throw DomainError("matrix mul: dimension mismatch");
  LaurentMatrix m(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Laurent acc;
      for (int k = 0; k < a.n; ++k) acc += a.at(i, k) * b.at(k, j);
      m.at(i, j) = acc;
    }
  return m;
}

LaurentMatrix scale(const Laurent& c, const LaurentMatrix& m) {
  LaurentMatrix r(m.n);
  for (size_t i = 0; i < m.e.size(); ++i) r.e[i] = c * m.e[i];
  return r;
}

Laurent det(const LaurentMatrix& m) {
  const int n = m.n;
  if (n == 0) return Laurent::one();
  if (n > kMaxDim) throw DomainError("det: dimension too large for exact expansion");
  // D[mask] = determinant of the submatrix on rows 0..popcount(mask)-1 and
  // the column set encoded by mask (division-free subset dynamic program).
  std::vector<Laurent> D(size_t(1) << n);
  D[0] = Laurent::one();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    Laurent acc;
    int t = 0;  // index of column j within mask
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const Laurent& entry = m.at(k - 1, j);
      if (!entry.is_exact_zero()) {
        if (((k - 1 + t) & 1) == 0)
          acc += entry * D[mask & ~(1u << j)];
        else
          acc -= entry * D[mask & ~(1u << j)];
      }
      ++t;
    }
    D[mask] = acc;
  }
  return D[(size_t(1) << n) - 1];
}

LaurentMatrix inverse(const LaurentMatrix& m, long result_prec) {
  const int n = m.n;
  if (n == 0) return m;
  if (n > kMaxDim) throw DomainError("matrix inverse: dimension too large for exact expansion");
  Laurent d = det(m);
  if (d.is_exact_zero()) throw DomainError("matrix inverse: determinant is exactly zero");
  if (!d.valuation())
    throw PrecisionError("matrix inverse: determinant unresolved within precision");

  LaurentMatrix adj(n);
  if (n == 1) {
    adj.at(0, 0) = Laurent::one();
  } else {
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
        adj.at(j, i) = (((i + j) & 1) == 0) ? cof : -cof;
      }
  }

  const bool exact_div = d.exact() && d.terms().size() == 1;
  Laurent dinv;
  if (exact_div) {
    dinv = d.inverse(0);  // exact
  } else {
    long va = kInf;
    for (const Laurent& x : adj.e) va = std::min(va, lo_bound(x));
    dinv = d.inverse(result_prec - va);
  }
  LaurentMatrix out(n);
  for (size_t i = 0; i < adj.e.size(); ++i) {
    out.e[i] = adj.e[i] * dinv;
    if (!out.e[i].exact()) out.e[i] = out.e[i].truncated(result_prec);
  }
  return out;
}

namespace {

// Polynomial in mu with Laurent coefficients, index = power of mu.
using PolyMu = std::vector<Laurent>;

PolyMu poly_add(const PolyMu& a, const PolyMu& b) {
  PolyMu r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

PolyMu poly_sub(const PolyMu& a, const PolyMu& b) {
  PolyMu r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

PolyMu poly_mul(const PolyMu& a, const PolyMu& b) {
  if (a.empty() || b.empty()) return {};
  PolyMu r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

CharPoly char_poly(const LaurentMatrix& m) {
  const int n = m.n;
  if (n < 1) throw DomainError("char poly: empty matrix");
  if (n > kMaxDim) throw DomainError("char poly: dimension too large for exact expansion");
  // Same subset dynamic program as det(), over polynomials in mu, applied to
  // mu*I - M.  Division-free throughout.
  std::vector<PolyMu> D(size_t(1) << n);
  D[0] = PolyMu{Laurent::one()};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    PolyMu acc;
    int t = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      PolyMu entry;  // (mu*I - M)[k-1][j]
      if (k - 1 == j)
        entry = PolyMu{-m.at(k - 1, j), Laurent::one()};
      else
        entry = PolyMu{-m.at(k - 1, j)};
      PolyMu prod = poly_mul(entry, D[mask & ~(1u << j)]);
      acc = (((k - 1 + t) & 1) == 0) ? poly_add(acc, prod) : poly_sub(acc, prod);
      ++t;
    }
    D[mask] = std::move(acc);
  }
  PolyMu p = D[(size_t(1) << n) - 1];
  p.resize(n + 1);
  CharPoly out;
  out.c.resize(n + 1);
  for (int i = 0; i <= n; ++i) out.c[i] = p[n - i];
  if (!(out.c[0] == Laurent::one()))
    throw PrecisionError("char poly: leading coefficient not resolved to 1");
  return out;
}

HomogeneityIndex homogeneity_index(const CharPoly& p) {
  const int n = p.degree();
  // First pass: definite rejections (some certain coefficient data is
  // incompatible with homogeneity).  Second pass: certify, or report the
  // precision gap that blocks certification.
  std::optional<Rat> q;
  bool uncertain = false;
  for (int i = 1; i <= n; ++i) {
    const Laurent& ci = p.c[i];
    const size_t visible = ci.terms().size();
    if (visible >= 2) return HomogeneityIndex{HomogeneityIndex::Kind::absent, Rat()};
    if (visible == 1) {
      Rat qi = Rat(*ci.valuation()) / i;
      if (q && *q != qi) return HomogeneityIndex{HomogeneityIndex::Kind::absent, Rat()};
      q = qi;
      if (!ci.exact()) uncertain = true;  // a hidden second term could exist
    } else if (!ci.exact()) {
      uncertain = true;  // not certified zero
    }
  }
  if (uncertain)
    throw PrecisionError("homogeneity: truncated coefficients cannot be certified");
  if (!q) return HomogeneityIndex{HomogeneityIndex::Kind::any, Rat()};
  return HomogeneityIndex{HomogeneityIndex::Kind::value, *q};
}

std::vector<std::pair<Rat, int>> newton_slopes(const CharPoly& p) {
  const int n = p.degree();
  struct Pt {
    long x;
    Rat y;
  };
  std::vector<Pt> pts;
  std::vector<std::pair<long, long>> floors;  // (x, >= y) constraints from truncated zeros
  for (int i = 0; i <= n; ++i) {
    const Laurent& ci = p.c[i];
    if (auto v = ci.valuation())
      pts.push_back({i, Rat(*v)});
    else if (!ci.exact())
      floors.emplace_back(i, *ci.precision());
  }
  if (pts.empty() || pts.front().x != 0)
    throw DomainError("newton polygon: leading coefficient must be nonzero");

  // Lower convex hull, x ascending.
  auto cross = [](const Pt& a, const Pt& b, const Pt& c) {
    return Rat(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * Rat(c.x - a.x);
  };
  std::vector<Pt> hull;
  for (const Pt& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }

  // Height of the hull at abscissa x (only queried inside the hull's span).
  auto height = [&](long x) -> Rat {
    for (size_t i = 0; i + 1 < hull.size(); ++i)
      if (hull[i].x <= x && x <= hull[i + 1].x) {
        Rat t = Rat(x - hull[i].x) / Rat(hull[i + 1].x - hull[i].x);
        return hull[i].y + t * (hull[i + 1].y - hull[i].y);
      }
    return hull.back().y;
  };
  for (auto [x, floor_y] : floors) {
    if (x > hull.back().x)
      throw PrecisionError(
          "newton polygon: a truncated trailing coefficient could extend the hull");
    if (Rat(floor_y) < height(x))
      throw PrecisionError("newton polygon: a truncated coefficient could dip below the hull");
  }

  std::vector<std::pair<Rat, int>> slopes;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    Rat s = (hull[i + 1].y - hull[i].y) / Rat(hull[i + 1].x - hull[i].x);
    slopes.emplace_back(s, static_cast<int>(hull[i + 1].x - hull[i].x));
  }
  return slopes;
}

Rat eigen_valuations(const CharPoly& p) {
  HomogeneityIndex h = homogeneity_index(p);
  if (h.kind != HomogeneityIndex::Kind::value)
    throw DomainError(h.kind == HomogeneityIndex::Kind::any
                          ? "eigen valuations: nilpotent polynomial has no nonzero roots"
                          : "eigen valuations: polynomial is not homogeneous");
  if (!p.c[p.degree()].valuation())
    throw DomainError("eigen valuations: zero constant term (zero roots present)");
  auto slopes = newton_slopes(p);
  int mult = 0;
  for (const auto& [s, m] : slopes) {
    if (s != h.q)
      throw std::logic_error("eigen valuations: Newton slope disagrees with homogeneity index");
    mult += m;
  }
  if (mult != p.degree())
    throw std::logic_error("eigen valuations: slope multiplicities do not sum to the degree");
  return h.q;
}

LaurentMatrix companion_rep(const CharPoly& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("companion: degree must be >= 1");
  if (!(p.c[0] == Laurent::one())) throw DomainError("companion: polynomial must be monic");
  for (int i = 1; i <= n; ++i)
    if (!p.c[i].exact() || p.c[i].terms().size() > 1)
      throw DomainError("companion: coefficients must be exact monomials");
  LaurentMatrix m(n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = Laurent::one();
  for (int i = 1; i <= n; ++i) m.at(i - 1, 0) = -p.c[i];
  return m;
}

}  // namespace springer

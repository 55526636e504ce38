#include "snc/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace snc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DependentInput: return "DependentInput";
    case ErrorCode::UnsaturatedWindow: return "UnsaturatedWindow";
    case ErrorCode::NonFreeAction: return "NonFreeAction";
    case ErrorCode::SncConditionViolated: return "SncConditionViolated";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotEquidimensional: return "NotEquidimensional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

namespace {

// Smallest nonzero |entry| in the lower-right block starting at (t, t).
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = f.d;
  const std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(d, t, pi, pj)) break;

    for (;;) {
      d.swap_rows(t, pi);
      f.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      f.v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        f.u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        f.v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }

      if (clean) {
        // Divisibility: pull an offending row up into the pivot row and retry.
        bool divides = true;
        for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
          for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (d(i, j) % d(t, t) != 0) {
              d.add_row(t, i, Integer(1));
              f.u.add_row(t, i, Integer(1));
              divides = false;
              break;
            }
        if (divides) break;
      }
      find_pivot(d, t, pi, pj);
    }

    if (d(t, t) < 0) {
      d.negate_row(t);
      f.u.negate_row(t);
    }
  }
  return f;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

RatMatrix reduced_row_echelon(const RatMatrix& m, std::vector<std::size_t>* pivots) {
  RatMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      a.add_row(i, row, -a(i, col));
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return a;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  reduced_row_echelon(m, &pivots);
  return pivots.size();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      a.add_row(i, k, -a(i, k) / a(k, k));
    }
  }
  return det;
}

RatMatrix rational_kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = reduced_row_echelon(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  RatMatrix basis(m.cols(), m.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], out) = -r(i, free);
    ++out;
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "solve: right-hand side length");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix r = reduced_row_echelon(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const RatMatrix r = reduced_row_echelon(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::InvalidInput, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(inv(i, j)) != 1) fail(ErrorCode::InvalidInput, "matrix is not unimodular");
      out(i, j) = numerator(inv(i, j));
    }
  return out;
}

Integer lattice_index(const IntMatrix& vectors) {
  const SmithForm f = smith_normal_form(vectors);
  const auto factors = f.invariant_factors();
  if (factors.size() != vectors.cols())
    fail(ErrorCode::DependentInput, "vectors are linearly dependent over Q");
  Integer index = 1;
  for (const auto& d : factors) index *= d;
  return index;
}

std::optional<IntMatrix> extend_to_lattice_basis(const IntMatrix& vectors, std::size_t ambient_rank) {
  if (vectors.rows() != ambient_rank)
    fail(ErrorCode::DimensionMismatch, "vector length differs from the ambient rank");
  const std::size_t k = vectors.cols();
  if (k > ambient_rank) fail(ErrorCode::DependentInput, "more vectors than the ambient rank");
  if (k == 0) return IntMatrix::identity(ambient_rank);

  // vectors = U^{-1} D V^{-1}; the first k columns of U^{-1} span the
  // saturation, and the remaining ones complete it to a basis of ℤ^n.
  const SmithForm f = smith_normal_form(vectors);
  if (f.rank() != k) fail(ErrorCode::DependentInput, "vectors are linearly dependent over Q");
  for (std::size_t i = 0; i < k; ++i)
    if (f.d(i, i) != 1) return std::nullopt;

  const IntMatrix u_inv = unimodular_inverse(f.u);
  IntMatrix out(ambient_rank, ambient_rank);
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = vectors(i, j);
    for (std::size_t j = k; j < ambient_rank; ++j) out(i, j) = u_inv(i, j);
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Integer gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

IntVector primitive(IntVector v) {
  const Integer g = gcd(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
}

}  // namespace snc

#include "gkz/exactalg/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gkz/errors.hpp"

namespace gkz::exact {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  if (!columns.empty()) rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidInput("ragged column list");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::column_vectors() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) m(i, k) = (*this)(i, cols[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(rows[k], j);
  return m;
}

IntMatrix IntMatrix::without_column(std::size_t j) const {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < cols_; ++k)
    if (k != j) keep.push_back(k);
  return select_columns(keep);
}

IntMatrix IntMatrix::with_row(const IntVector& r) const {
  if (r.size() != cols_) throw InvalidInput("row length mismatch");
  IntMatrix m = *this;
  m.data_.insert(m.data_.end(), r.begin(), r.end());
  ++m.rows_;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Fraction-free forward elimination in place; returns the rank. When `det`
// is given the matrix must be square and receives the determinant.
std::size_t bareiss(IntMatrix& a, Integer* det) {
  const std::size_t m = a.rows(), n = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) {
      if (det) {
        *det = 0;
        return r;
      }
      continue;
    }
    if (p != r) {
      a.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det) *det = (r == n) ? Integer(sign * prev) : Integer(0);
  return r;
}

// Reduced row echelon form over Q of the augmented system; returns pivot
// columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

// Replaces rows (r, i) by the unimodular combination that puts gcd(a, b)
// into row r and zero into row i at column c.
void gcd_combine_rows(IntMatrix& h, IntMatrix& u, std::size_t r, std::size_t i, std::size_t c) {
  Integer a = h(r, c), b = h(i, c), g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer ag = a / g, bg = b / g;
  auto mix = [&](IntMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer x = m(r, j), y = m(i, j);
      m(r, j) = s * x + t * y;
      m(i, j) = ag * y - bg * x;
    }
  };
  mix(h);
  mix(u);
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss(a, nullptr);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  Integer d;
  bareiss(a, &d);
  return d;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i)
      if (h(i, c) != 0) gcd_combine_rows(h, u, r, i, c);
    if (h(r, c) == 0) {
      // the gcd step moves any nonzero entry into row r, so the column is empty
      continue;
    }
    if (h(r, c) < 0)
      for (auto* mat : {&h, &u})
        for (std::size_t j = 0; j < mat->cols(); ++j) (*mat)(r, j) = -(*mat)(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm out{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  auto swap_r = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    d.swap_columns(a, b);
    v.swap_columns(a, b);
  };
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      swap_r(k, pi);
      swap_c(k, pj);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (d(i, k) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, k).get_mpz_t(), d(k, k).get_mpz_t());
        add_row_multiple(d, i, k, -q);
        add_row_multiple(u, i, k, -q);
        if (d(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (d(k, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(k, j).get_mpz_t(), d(k, k).get_mpz_t());
        add_col_multiple(d, j, k, -q);
        add_col_multiple(v, j, k, -q);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row k and start over
      std::size_t bad = rows;
      for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row_multiple(d, k, bad, 1);
      add_row_multiple(u, k, bad, 1);
    }
    if (d(k, k) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(k, j) = -d(k, j);
      for (std::size_t j = 0; j < rows; ++j) u(k, j) = -u(k, j);
    }
  }
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t s = m.cols();
  if (s == 0) return {};
  HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<IntVector> basis;
  for (std::size_t i = hf.rank; i < s; ++i) basis.push_back(hf.u.row(i));
  if (basis.empty()) return basis;
  HermiteForm canon = hermite_normal_form(IntMatrix::from_rows(basis));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < canon.rank; ++i) out.push_back(canon.h.row(i));
  return out;
}

bool lattice_contains(const std::vector<IntVector>& generators, const IntVector& w) {
  if (generators.empty()) {
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
  }
  HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(generators));
  IntVector rest = w;
  std::size_t r = 0;
  for (std::size_t c = 0; c < rest.size(); ++c) {
    if (r < hf.rank && hf.h(r, c) != 0) {
      if (!mpz_divisible_p(rest[c].get_mpz_t(), hf.h(r, c).get_mpz_t())) return false;
      Integer q = rest[c] / hf.h(r, c);
      for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= q * hf.h(r, j);
      ++r;
    } else if (rest[c] != 0) {
      return false;
    }
  }
  return true;
}

bool row_span_contains(const IntMatrix& m, const RatVector& v) {
  if (v.size() != m.cols()) throw InvalidInput("vector length mismatch");
  Integer den = common_denominator(v);
  IntVector scaled(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) scaled[j] = Rational(v[j] * den).get_num();
  return rank(m.with_row(scaled)) == rank(m);
}

std::optional<RatVector> solve(const IntMatrix& m, const RatVector& rhs) {
  if (rhs.size() != m.rows()) throw InvalidInput("right-hand side length mismatch");
  const std::size_t n = m.cols();
  std::vector<RatVector> rows(m.rows(), RatVector(n + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n] = rhs[i];
  }
  std::vector<std::size_t> pivots = rref(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVector x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rows[k][n];
  return x;
}

std::optional<RatVector> solve_left(const IntMatrix& m, const RatVector& rhs) {
  return solve(m.transpose(), rhs);
}

std::vector<IntVector> rational_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<RatVector> rows(m.rows(), RatVector(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
  std::vector<std::size_t> pivots = rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntVector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][f];
    Integer den = common_denominator(v);
    IntVector iv(n);
    for (std::size_t j = 0; j < n; ++j) iv[j] = Rational(v[j] * den).get_num();
    out.push_back(primitive(std::move(iv)));
  }
  return out;
}

std::vector<std::size_t> independent_columns(const IntMatrix& m) {
  std::vector<std::size_t> chosen;
  std::size_t current = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    chosen.push_back(j);
    std::size_t r = rank(m.select_columns(chosen));
    if (r == current) {
      chosen.pop_back();
    } else {
      current = r;
    }
    if (current == m.rows()) break;
  }
  return chosen;
}

Integer lattice_index(const IntMatrix& m) {
  SmithForm sf = smith_normal_form(m);
  Integer prod = 1;
  bool any = false;
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
    if (sf.d(k, k) == 0) continue;
    prod *= sf.d(k, k);
    any = true;
  }
  return any ? prod : Integer(0);
}

}  // namespace gkz::exact

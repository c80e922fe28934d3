#include "gaugeball/qlinalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "gaugeball/errors.hpp"

namespace gaugeball {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Integer echelon form produced by Bareiss elimination. Row `t` has its
// leading entry in column pivots[t]; rows >= pivots.size() are zero.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
};

std::vector<Integer> integer_row(const QVector& r) {
  Integer scale = 1;
  for (const auto& q : r) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    out[j] = r[j].get_num() * (scale / r[j].get_den());
  }
  return out;
}

Echelon bareiss(const QMatrix& m) {
  Echelon e;
  e.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) e.rows.push_back(integer_row(m.row(i)));

  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t p = r;
    while (p < nrows && e.rows[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(e.rows[r], e.rows[p]);
    const Integer& piv = e.rows[r][col];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Integer v = piv * e.rows[i][j] - e.rows[i][col] * e.rows[r][j];
        mpz_divexact(e.rows[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      e.rows[i][col] = 0;
    }
    prev = piv;
    e.pivots.push_back(col);
    ++r;
  }
  return e;
}

// Back substitution over the echelon form; `x` must already hold values for
// all non-pivot columns. `rhs_col` (if set) is the augmented column index.
void back_substitute(const Echelon& e, std::size_t ncols, std::vector<Rational>& x,
                     std::optional<std::size_t> rhs_col) {
  for (std::size_t t = e.pivots.size(); t-- > 0;) {
    const std::size_t pc = e.pivots[t];
    Rational acc = rhs_col ? Rational(e.rows[t][*rhs_col]) : Rational(0);
    for (std::size_t c = pc + 1; c < ncols; ++c) {
      if (e.rows[t][c] != 0 && x[c] != 0) acc -= Rational(e.rows[t][c]) * x[c];
    }
    x[pc] = acc / Rational(e.rows[t][pc]);
  }
}

}  // namespace

Rational parse_rational(std::string_view text, std::string_view field) {
  auto fail = [&](const char* why) {
    throw InputError(std::string(field) + ": " + why + " in rational \"" + std::string(text) + "\"");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) fail("malformed digits");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail("zero denominator");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

QVector QVector::unit(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

bool QVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

QVector& QVector::operator+=(const QVector& other) {
  if (other.size() != size()) throw InputError("vector length mismatch in +");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  if (other.size() != size()) throw InputError("vector length mismatch in -");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& q : entries_) q *= s;
  return *this;
}

QVector operator-(QVector a) {
  for (auto& q : a.entries_) q = -q;
  return a;
}

bool operator<(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  return os << ')';
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch in dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

QVector primitive_integer(const QVector& v) {
  if (v.is_zero()) return v;
  Integer lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (const auto& q : v) {
    Integer num = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i].get_num() * (lcm / v[i].get_den()) / g);
  return out;
}

QVector canonical_direction(const QVector& v) {
  QVector p = primitive_integer(v);
  for (const auto& q : p) {
    if (q != 0) {
      if (q < 0) p *= Rational(-1);
      break;
    }
  }
  return p;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows, QVector(cols)), cols_(cols) {}

QMatrix::QMatrix(std::vector<QVector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  if (!rows_.empty()) cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw InputError("matrix rows have different lengths");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  }
  return t;
}

QVector QMatrix::operator*(const QVector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector length mismatch");
  QVector y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

std::size_t rank(const QMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const Echelon e = bareiss(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n);
    x[f] = 1;
    back_substitute(e, n, x, std::nullopt);
    basis.push_back(canonical_direction(QVector(std::move(x))));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length does not match row count");
  const std::size_t n = m.cols();
  std::vector<QVector> aug;
  aug.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> r(m.row(i).entries());
    r.push_back(b[i]);
    aug.emplace_back(std::move(r));
  }
  const Echelon e = bareiss(QMatrix(std::move(aug), n + 1));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  std::vector<Rational> x(n);
  back_substitute(e, n, x, n);
  return QVector(std::move(x));
}

int affine_dim(const std::vector<QVector>& points) {
  if (points.empty()) throw InputError("affine_dim: empty point list");
  const std::size_t n = points.front().size();
  std::vector<QVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points.front());
  return static_cast<int>(rank(QMatrix(std::move(diffs), n)));
}

std::size_t rank_of(const std::vector<QVector>& vectors, std::size_t n) { return rank(QMatrix(vectors, n)); }

}  // namespace gaugeball

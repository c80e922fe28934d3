#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gaugeball {

/// Exact rational scalar. GMP keeps every mpq_class in lowest terms with a
/// positive denominator after each arithmetic operation, so equality is
/// structural.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0).
/// Throws InputError naming `field` on malformed input.
Rational parse_rational(std::string_view text, std::string_view field = "value");

/// Canonical wire form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

/// Dense vector of rationals. The length is the ambient dimension of
/// whatever computation the vector belongs to.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : entries_(n) {}
  QVector(std::initializer_list<Rational> values) : entries_(values) {}
  explicit QVector(std::vector<Rational> values) : entries_(std::move(values)) {}

  static QVector zero(std::size_t n) { return QVector(n); }
  static QVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;

  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  QVector& operator*=(const Rational& s);

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(QVector a, const Rational& s) { return a *= s; }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
  friend QVector operator-(QVector a);

  friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }
  /// Lexicographic order, for canonical sorting and dedup.
  friend bool operator<(const QVector& a, const QVector& b);

 private:
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const QVector& v);

Rational dot(const QVector& a, const QVector& b);

/// Positive multiple of `v` with integer entries whose gcd is 1. Zero stays zero.
QVector primitive_integer(const QVector& v);

/// Like primitive_integer, but the first nonzero entry is made positive.
QVector canonical_direction(const QVector& v);

/// Row-major dense rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share one length; `cols` is used when `rows` is empty.
  explicit QMatrix(std::vector<QVector> rows, std::size_t cols = 0);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const QVector& row(std::size_t i) const { return rows_[i]; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  QMatrix transposed() const;
  QVector operator*(const QVector& x) const;

 private:
  std::vector<QVector> rows_;
  std::size_t cols_ = 0;
};

/// Exact rank over Q (fraction-free elimination).
std::size_t rank(const QMatrix& m);

/// Basis of {x : m x = 0}; each vector is integral, primitive and has a
/// positive first nonzero entry. Empty iff rank(m) == cols.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Exact solution of m x = b with free variables set to zero, or nullopt
/// when the system is inconsistent. Throws InputError on a length mismatch.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Dimension of the affine hull (0 for a single point). Throws InputError on
/// an empty list.
int affine_dim(const std::vector<QVector>& points);

/// Rank of a list of vectors of common length n.
std::size_t rank_of(const std::vector<QVector>& vectors, std::size_t n);

}  // namespace gaugeball

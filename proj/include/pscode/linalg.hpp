#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pscode/field.hpp"

namespace pscode {

using Vec = std::vector<Fe>;

/// Dense row-major matrix over GF(2^e). The field is supplied to the free
/// functions that need arithmetic; the matrix itself only stores entries.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows given as raw bit values.
  Mat(std::initializer_list<std::initializer_list<std::uint32_t>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(std::size_t cols, std::span<const Vec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Fe& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fe> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fe> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  const std::vector<Fe>& data() const { return data_; }

  void append_row(std::span<const Fe> v);
  /// Rows of `top` followed by rows of `bottom`.
  static Mat stack(const Mat& top, const Mat& bottom);

  Mat transpose() const;

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat& a, const Mat& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> data_;
};

Mat multiply(const Field& f, const Mat& a, const Mat& b);

struct Echelon {
  Mat form;                          // reduced row echelon form, zero rows kept at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(const Field& f, const Mat& m);
std::size_t rank(const Field& f, const Mat& m);

/// Basis (canonical, RREF) of the right null space {x : m * x^t = 0}, as rows.
Mat null_space(const Field& f, const Mat& m);

/// Unit vector e_{index+1} of length n (0-indexed storage).
Vec unit_vector(std::size_t n, std::size_t index);

/// Row space inside F_q^ambient held by its canonical RREF basis without zero rows.
/// Two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  friend Subspace span(const Field&, std::size_t, const Mat&);

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const Field& f, std::size_t ambient, const Mat& rows);

bool contains(const Field& f, const Subspace& a, std::span<const Fe> v);
Subspace subspace_sum(const Field& f, const Subspace& a, const Subspace& b);
/// Intersection via the left kernel of the stacked bases [A; B].
Subspace subspace_intersect(const Field& f, const Subspace& a, const Subspace& b);
bool is_subset(const Field& f, const Subspace& a, const Subspace& b);

/// Rows of `b` extending a basis of `a` to a basis of `b` (a ⊆ b required).
Mat complement_basis(const Field& f, const Subspace& a, const Subspace& b);

}  // namespace pscode

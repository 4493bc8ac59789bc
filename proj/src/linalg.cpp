#include "pscode/linalg.hpp"

#include <stdexcept>
#include <string>

namespace pscode {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument(std::string(op) + ": ambient dimensions differ (" +
                                std::to_string(a.ambient()) + " vs " + std::to_string(b.ambient()) + ")");
  }
}

// Subtracts coef * src from dst in place.
void axpy(const Field& f, std::span<Fe> dst, Fe coef, std::span<const Fe> src) {
  if (coef.is_zero()) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (!src[i].is_zero()) dst[i] = f.sub(dst[i], f.mul(coef, src[i]));
  }
}

}  // namespace

Mat::Mat(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (auto v : r) data_.emplace_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

Mat Mat::from_rows(std::size_t cols, std::span<const Vec> rows) {
  Mat m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Mat::append_row(std::span<const Fe> v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("row length " + std::to_string(v.size()) + " does not match " +
                                std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Mat Mat::stack(const Mat& top, const Mat& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("stack: column counts differ");
  Mat out = top;
  out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
  out.rows_ += bottom.rows_;
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat multiply(const Field& f, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Echelon rref(const Field& f, const Mat& m) {
  Echelon e{m, 0, {}};
  Mat& a = e.form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Fe s = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(s, a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r) axpy(f, a.row(i), a(i, c), a.row(r));
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::size_t rank(const Field& f, const Mat& m) { return rref(f, m).rank; }

Mat null_space(const Field& f, const Mat& m) {
  const Echelon e = rref(f, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Mat basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n);
    x[free] = kOne;
    for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = f.sub(kZero, e.form(i, free));
    basis.append_row(x);
  }
  return rref(f, basis).form;
}

Vec unit_vector(std::size_t n, std::size_t index) {
  if (index >= n) throw std::out_of_range("unit vector index out of range");
  Vec v(n);
  v[index] = kOne;
  return v;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace span(const Field& f, std::size_t ambient, const Mat& rows) {
  if (rows.cols() != ambient) {
    throw std::invalid_argument("span: rows have " + std::to_string(rows.cols()) +
                                " columns, ambient is " + std::to_string(ambient));
  }
  Echelon e = rref(f, rows);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(0, ambient);
  for (std::size_t i = 0; i < e.rank; ++i) s.basis_.append_row(e.form.row(i));
  s.pivots_ = std::move(e.pivots);
  return s;
}

bool contains(const Field& f, const Subspace& a, std::span<const Fe> v) {
  if (v.size() != a.ambient()) {
    throw std::invalid_argument("contains: vector length " + std::to_string(v.size()) +
                                " does not match ambient " + std::to_string(a.ambient()));
  }
  Vec w(v.begin(), v.end());
  for (std::size_t i = 0; i < a.dim(); ++i) axpy(f, w, w[a.pivots()[i]], a.basis().row(i));
  for (Fe x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Subspace subspace_sum(const Field& f, const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  return span(f, a.ambient(), Mat::stack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Field& f, const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersect");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
  // (x, y) with x*A + y*B = 0 gives x*A in both row spaces.
  const Mat stacked = Mat::stack(a.basis(), b.basis());
  const Mat kernel = null_space(f, stacked.transpose());
  Mat coeffs(kernel.rows(), a.dim());
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) coeffs(r, c) = kernel(r, c);
  return span(f, a.ambient(), multiply(f, coeffs, a.basis()));
}

bool is_subset(const Field& f, const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "is_subset");
  if (a.dim() > b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!contains(f, b, a.basis().row(i))) return false;
  }
  return true;
}

Mat complement_basis(const Field& f, const Subspace& a, const Subspace& b) {
  if (!is_subset(f, a, b)) throw std::invalid_argument("complement_basis: lower space is not contained in upper");
  Mat acc = a.basis();
  Mat extra(0, a.ambient());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Mat trial = acc;
    trial.append_row(b.basis().row(i));
    if (rank(f, trial) > acc.rows()) {
      acc = std::move(trial);
      extra.append_row(b.basis().row(i));
    }
  }
  return extra;
}

}  // namespace pscode

#include "pscode/enumeration.hpp"

#include <algorithm>
#include <string>

namespace pscode {

namespace {

void validate(const Field& f, const IntervalQuery& q) {
  if (q.lower.ambient() != q.upper.ambient()) throw std::invalid_argument("interval: ambient dimensions differ");
  if (!is_subset(f, q.lower, q.upper)) throw std::invalid_argument("interval: lower is not contained in upper");
  if (q.dim < q.lower.dim() || q.dim > q.upper.dim()) {
    throw std::invalid_argument("interval: target dimension " + std::to_string(q.dim) + " outside [" +
                                std::to_string(q.lower.dim()) + ", " + std::to_string(q.upper.dim()) + "]");
  }
}

// Calls visit(R) for every j x c matrix R in reduced row echelon form of rank j.
void for_each_rref(const Field& f, std::size_t j, std::size_t c, const std::function<void(const Mat&)>& visit) {
  std::vector<std::size_t> piv(j);
  for (std::size_t i = 0; i < j; ++i) piv[i] = i;
  const auto elements = f.elements();
  while (true) {
    std::vector<bool> is_pivot(c, false);
    for (auto p : piv) is_pivot[p] = true;
    Mat r(j, c);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < j; ++i) {
      r(i, piv[i]) = kOne;
      for (std::size_t col = piv[i] + 1; col < c; ++col) {
        if (!is_pivot[col]) free.emplace_back(i, col);
      }
    }
    std::vector<std::size_t> digit(free.size(), 0);
    while (true) {
      visit(r);
      std::size_t pos = 0;
      for (; pos < digit.size(); ++pos) {
        if (++digit[pos] < elements.size()) {
          r(free[pos].first, free[pos].second) = elements[digit[pos]];
          break;
        }
        digit[pos] = 0;
        r(free[pos].first, free[pos].second) = kZero;
      }
      if (pos == digit.size()) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = j;
    while (i > 0 && piv[i - 1] == c - j + (i - 1)) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t t = i; t < j; ++t) piv[t] = piv[t - 1] + 1;
  }
}

BigInt pow_big(std::uint64_t q, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

void for_each_subspace_between(const Field& f, const IntervalQuery& q,
                               const std::function<void(const Subspace&)>& visit) {
  validate(f, q);
  const Mat complement = complement_basis(f, q.lower, q.upper);
  const std::size_t c = complement.rows();
  const std::size_t j = q.dim - q.lower.dim();
  const std::size_t n = q.lower.ambient();
  for_each_rref(f, j, c, [&](const Mat& r) {
    Mat rows = q.lower.basis();
    if (j > 0) rows = Mat::stack(rows, multiply(f, r, complement));
    visit(span(f, n, rows));
  });
}

std::vector<Subspace> subspaces_between(const Field& f, const IntervalQuery& q) {
  std::vector<Subspace> out;
  for_each_subspace_between(f, q, [&](const Subspace& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> subspaces_typed(const PsSpace& space, const IntervalQuery& q) {
  if (!q.typeFilter) throw std::invalid_argument("subspaces_typed: type filter required");
  if (q.lower.ambient() != space.n()) throw std::invalid_argument("subspaces_typed: ambient mismatch");
  validate(space.field(), q);
  std::vector<Subspace> out;
  if (q.typeFilter->m != q.dim) return out;
  for_each_subspace_between(space.field(), q, [&](const Subspace& x) {
    if (classify(space, x) == *q.typeFilter) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= pow_big(q, n - i) - 1;
    den *= pow_big(q, k - i) - 1;
  }
  return num / den;
}

bool anzahl_feasible(std::size_t m, std::size_t s, std::size_t nDim) {
  return 2 * s <= m && m <= nDim && m - s <= nDim / 2;
}

BigInt count_N(std::size_t m, std::size_t s, std::size_t nDim, const Field& f) {
  if (nDim % 2 != 0) throw std::invalid_argument("count_N: symplectic dimension must be even");
  if (!anzahl_feasible(m, s, nDim)) return 0;
  const std::uint64_t q = f.order();
  const std::size_t nu = nDim / 2;
  BigInt num = pow_big(q, 2 * s * (nu + s - m));
  for (std::size_t i = nu + s - m + 1; i <= nu; ++i) num *= pow_big(q, 2 * i) - 1;
  BigInt den = 1;
  for (std::size_t i = 1; i <= s; ++i) den *= pow_big(q, 2 * i) - 1;
  for (std::size_t i = 1; i <= m - 2 * s; ++i) den *= pow_big(q, i) - 1;
  if (num % den != 0) throw std::logic_error("count_N: closed form is not integral");
  return num / den;
}

BudgetExceeded::BudgetExceeded(const BigInt& required, std::uint64_t budget)
    : std::runtime_error("oracle enumeration needs " + required.str() + " subspaces, budget is " +
                         std::to_string(budget)),
      required_(required) {}

BigInt count_N_oracle(std::size_t m, std::size_t s, std::size_t nDim, const Field& f, std::uint64_t budget) {
  if (nDim % 2 != 0) throw std::invalid_argument("count_N_oracle: symplectic dimension must be even");
  if (m > nDim) return 0;
  const BigInt total = gaussian_binomial(nDim, m, f.order());
  if (total > budget) throw BudgetExceeded(total, budget);
  const Mat k = symplectic_form(nDim / 2);
  BigInt count = 0;
  IntervalQuery q{Subspace::zero(nDim), Subspace::full(nDim), m, std::nullopt};
  for_each_subspace_between(f, q, [&](const Subspace& x) {
    if (rank(f, gram(f, k, x)) == 2 * s) ++count;
  });
  return count;
}

}  // namespace pscode

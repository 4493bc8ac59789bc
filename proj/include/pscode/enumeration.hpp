#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pscode/geometry.hpp"
#include "pscode/linalg.hpp"

namespace pscode {

using BigInt = boost::multiprecision::cpp_int;

/// Sandwich query: all X with lower ⊆ X ⊆ upper and dim X = dim, optionally of a fixed type.
struct IntervalQuery {
  Subspace lower;
  Subspace upper;
  std::size_t dim = 0;
  std::optional<SubspaceType> typeFilter;
};

/// Visits every subspace of the interval exactly once (pivot-pattern order, not sorted).
void for_each_subspace_between(const Field& f, const IntervalQuery& q,
                               const std::function<void(const Subspace&)>& visit);

/// Every subspace of the interval, sorted by canonical basis. Ignores typeFilter.
std::vector<Subspace> subspaces_between(const Field& f, const IntervalQuery& q);

/// The members of subspaces_between whose type equals q.typeFilter (which must be set).
std::vector<Subspace> subspaces_typed(const PsSpace& space, const IntervalQuery& q);

/// q-binomial coefficient [n choose k]_q; zero when k > n.
BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/// True iff subspaces of type (m, s) exist in the symplectic space of dimension nDim.
bool anzahl_feasible(std::size_t m, std::size_t s, std::size_t nDim);

/// Number of m-dimensional subspaces of the nDim-dimensional symplectic space
/// (form K) whose Gram matrix has rank 2s. Closed form:
///   q^{2s(nu+s-m)} prod_{i=nu+s-m+1}^{nu} (q^{2i}-1)
///     / ( prod_{i=1}^{s} (q^{2i}-1) * prod_{i=1}^{m-2s} (q^i-1) ),  nu = nDim/2.
BigInt count_N(std::size_t m, std::size_t s, std::size_t nDim, const Field& f);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& required, std::uint64_t budget);
  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Brute-force count_N: enumerates every m-dimensional subspace of F_q^nDim and
/// ranks its Gram matrix under K. Throws BudgetExceeded rather than truncating.
BigInt count_N_oracle(std::size_t m, std::size_t s, std::size_t nDim, const Field& f,
                      std::uint64_t budget = kDefaultOracleBudget);

}  // namespace pscode

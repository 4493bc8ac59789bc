#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "pscode/field.hpp"
#include "pscode/linalg.hpp"

namespace pscode {

/// K = [[0, I_nu], [I_nu, 0]], the standard symplectic form on F_q^(2 nu).
Mat symplectic_form(std::size_t nu);

/// Pseudo-symplectic space F_q^(2 nu + delta) with the form S_delta:
/// K on the first 2 nu coordinates, then [1] (delta = 1) or [[0,1],[1,1]] (delta = 2).
class PsSpace {
 public:
  PsSpace(Field field, std::size_t nu, unsigned delta);

  const Field& field() const { return field_; }
  std::size_t nu() const { return nu_; }
  unsigned delta() const { return delta_; }
  std::size_t n() const { return 2 * nu_ + delta_; }
  const Mat& form() const { return form_; }

  /// e_{2 nu + 1}, the distinguished vector of the epsilon index.
  Vec e_star() const { return unit_vector(n(), 2 * nu_); }

 private:
  Field field_;
  std::size_t nu_;
  unsigned delta_;
  Mat form_;
};

/// Type (m, 2s + tau, s, tau, eps) of a subspace. formRank is the rank of its
/// Gram matrix; tau = 0 for alternate Gram, 1 for odd rank, 2 for non-alternate even rank.
struct SubspaceType {
  std::size_t m = 0;
  std::size_t formRank = 0;
  std::size_t sIndex = 0;
  unsigned tau = 0;
  unsigned eps = 0;

  /// Builds the type from the four-tuple notation (m, 2s+tau, s, eps).
  static SubspaceType of(std::size_t m, std::size_t formRank, std::size_t s, unsigned eps);

  /// "(m,2s+tau,s,eps)"
  std::string to_string() const;

  friend auto operator<=>(const SubspaceType&, const SubspaceType&) = default;
};

/// B * form * B^t for the canonical basis B of `p`.
Mat gram(const Field& f, const Mat& form, const Subspace& p);
Mat gram(const PsSpace& space, const Subspace& p);

/// Classifies an arbitrary symmetric Gram matrix (tau, s, rank); eps is supplied.
SubspaceType classify_gram(const Field& f, const Mat& g, unsigned eps);

SubspaceType classify(const PsSpace& space, const Subspace& p);

/// {y : y * S * x^t = 0 for all x in p}
Subspace perp(const PsSpace& space, const Subspace& p);

}  // namespace pscode

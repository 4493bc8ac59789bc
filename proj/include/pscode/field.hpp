#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pscode {

/// Element of GF(2^e): polynomial coefficients over GF(2), lowest degree in the lowest bit.
struct Fe {
  std::uint32_t bits = 0;

  constexpr Fe() = default;
  constexpr explicit Fe(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

inline constexpr Fe kZero{0};
inline constexpr Fe kOne{1};

/// True iff `poly` (bit-vector over GF(2)) has degree >= 1 and no factor of degree
/// between 1 and deg/2.
bool is_irreducible(std::uint32_t poly);

/// Lexicographically least irreducible polynomial of degree e.
std::uint32_t default_modulus(unsigned e);

/// The field GF(2^e) defined by an irreducible modulus. Cheap to copy; the
/// multiplication tables are shared and immutable.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  explicit Field(unsigned e);
  Field(unsigned e, std::uint32_t modulus);

  unsigned degree() const { return e_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return std::uint32_t{1} << e_; }

  bool contains(Fe a) const { return a.bits < order(); }

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const { return add(a, b); }
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe pow(Fe a, std::uint64_t exponent) const;

  /// All q elements in increasing bits order.
  std::vector<Fe> elements() const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  void check(Fe a) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  unsigned e_;
  std::uint32_t modulus_;
  // Full product and inverse tables for e <= 8; empty otherwise.
  std::shared_ptr<const std::vector<std::uint16_t>> mul_table_;
  std::shared_ptr<const std::vector<std::uint16_t>> inv_table_;
};

}  // namespace pscode

#include "pscode/field.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace pscode {

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : static_cast<int>(std::bit_width(p)) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

constexpr unsigned kTableDegree = 8;

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (int fd = 1; fd <= d / 2; ++fd) {
    for (std::uint32_t f = std::uint32_t{1} << fd; f < (std::uint32_t{2} << fd); ++f) {
      if (poly_mod(poly, f) == 0) return false;
    }
  }
  return true;
}

std::uint32_t default_modulus(unsigned e) {
  if (e < 1 || e > Field::kMaxDegree) throw std::invalid_argument("field degree must be in [1, 16]");
  for (std::uint32_t p = std::uint32_t{1} << e;; ++p) {
    if (is_irreducible(p)) return p;
  }
}

Field::Field(unsigned e) : Field(e, default_modulus(e)) {}

Field::Field(unsigned e, std::uint32_t modulus) : e_(e), modulus_(modulus) {
  if (e < 1 || e > kMaxDegree) throw std::invalid_argument("field degree must be in [1, 16]");
  if (poly_degree(modulus) != static_cast<int>(e)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " does not have degree " +
                                std::to_string(e));
  }
  if (!is_irreducible(modulus)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " is reducible over GF(2)");
  }
  if (e <= kTableDegree) {
    const std::uint32_t q = order();
    auto mul = std::make_shared<std::vector<std::uint16_t>>(std::size_t{q} * q);
    auto inv = std::make_shared<std::vector<std::uint16_t>>(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto p = mul_slow(a, b);
        (*mul)[std::size_t{a} * q + b] = static_cast<std::uint16_t>(p);
        if (p == 1) (*inv)[a] = static_cast<std::uint16_t>(b);
      }
    }
    mul_table_ = std::move(mul);
    inv_table_ = std::move(inv);
  }
}

void Field::check(Fe a) const {
  if (!contains(a)) {
    throw std::out_of_range("element " + std::to_string(a.bits) + " out of range for " + describe());
  }
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t product = 0;
  for (; b != 0; b >>= 1, a <<= 1) {
    if (b & 1u) product ^= a;
  }
  return poly_mod(product, modulus_);
}

Fe Field::add(Fe a, Fe b) const {
  check(a);
  check(b);
  return Fe{a.bits ^ b.bits};
}

Fe Field::mul(Fe a, Fe b) const {
  check(a);
  check(b);
  if (mul_table_) return Fe{(*mul_table_)[std::size_t{a.bits} * order() + b.bits]};
  return Fe{mul_slow(a.bits, b.bits)};
}

Fe Field::inv(Fe a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("inverse of zero in " + describe());
  if (inv_table_) return Fe{(*inv_table_)[a.bits]};
  // a^(q-2) = a^-1 in the multiplicative group of order q-1.
  return pow(a, order() - 2);
}

Fe Field::pow(Fe a, std::uint64_t exponent) const {
  check(a);
  Fe result = kOne;
  Fe base = a;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::vector<Fe> Field::elements() const {
  std::vector<Fe> out;
  out.reserve(order());
  for (std::uint32_t b = 0; b < order(); ++b) out.emplace_back(b);
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(2^" << e_ << ") mod 0x" << std::hex << modulus_;
  return os.str();
}

}  // namespace pscode

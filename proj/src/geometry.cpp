#include "pscode/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace pscode {

namespace {

void require_ambient(const PsSpace& space, const Subspace& p) {
  if (p.ambient() != space.n()) {
    throw std::invalid_argument("subspace ambient " + std::to_string(p.ambient()) +
                                " does not match space dimension " + std::to_string(space.n()));
  }
}

}  // namespace

Mat symplectic_form(std::size_t nu) {
  Mat k(2 * nu, 2 * nu);
  for (std::size_t i = 0; i < nu; ++i) {
    k(i, nu + i) = kOne;
    k(nu + i, i) = kOne;
  }
  return k;
}

PsSpace::PsSpace(Field field, std::size_t nu, unsigned delta)
    : field_(std::move(field)), nu_(nu), delta_(delta) {
  if (nu < 1) throw std::invalid_argument("nu must be at least 1");
  if (delta != 1 && delta != 2) throw std::invalid_argument("delta must be 1 or 2");
  form_ = Mat(n(), n());
  const Mat k = symplectic_form(nu);
  for (std::size_t r = 0; r < 2 * nu; ++r)
    for (std::size_t c = 0; c < 2 * nu; ++c) form_(r, c) = k(r, c);
  const std::size_t t = 2 * nu;
  if (delta == 1) {
    form_(t, t) = kOne;
  } else {
    form_(t, t + 1) = kOne;
    form_(t + 1, t) = kOne;
    form_(t + 1, t + 1) = kOne;
  }
}

SubspaceType SubspaceType::of(std::size_t m, std::size_t formRank, std::size_t s, unsigned eps) {
  if (formRank < 2 * s || formRank > 2 * s + 2) {
    throw std::invalid_argument("form rank must be 2s, 2s+1 or 2s+2");
  }
  return SubspaceType{m, formRank, s, static_cast<unsigned>(formRank - 2 * s), eps};
}

std::string SubspaceType::to_string() const {
  std::ostringstream os;
  os << '(' << m << ',' << formRank << ',' << sIndex << ',' << eps << ')';
  return os.str();
}

Mat gram(const Field& f, const Mat& form, const Subspace& p) {
  if (form.rows() != p.ambient()) throw std::invalid_argument("gram: form size does not match ambient");
  return multiply(f, multiply(f, p.basis(), form), p.basis().transpose());
}

Mat gram(const PsSpace& space, const Subspace& p) {
  require_ambient(space, p);
  return gram(space.field(), space.form(), p);
}

SubspaceType classify_gram(const Field& f, const Mat& g, unsigned eps) {
  const std::size_t r = rank(f, g);
  bool alternate = true;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!g(i, i).is_zero()) alternate = false;
  }
  SubspaceType t;
  t.m = g.rows();
  t.formRank = r;
  t.eps = eps;
  if (alternate) {
    if (r % 2 != 0) throw std::logic_error("alternate Gram matrix with odd rank");
    t.tau = 0;
    t.sIndex = r / 2;
  } else if (r % 2 == 1) {
    t.tau = 1;
    t.sIndex = (r - 1) / 2;
  } else {
    t.tau = 2;
    t.sIndex = (r - 2) / 2;
  }
  return t;
}

SubspaceType classify(const PsSpace& space, const Subspace& p) {
  require_ambient(space, p);
  const unsigned eps = contains(space.field(), p, space.e_star()) ? 1 : 0;
  return classify_gram(space.field(), gram(space, p), eps);
}

Subspace perp(const PsSpace& space, const Subspace& p) {
  require_ambient(space, p);
  if (p.dim() == 0) return Subspace::full(space.n());
  // y * (S * B^t) = 0  <=>  (B * S^t) * y^t = 0, and S is symmetric.
  const Mat conditions = multiply(space.field(), p.basis(), space.form());
  return span(space.field(), space.n(), null_space(space.field(), conditions));
}

}  // namespace pscode

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pscode/linalg.hpp"

using namespace pscode;

namespace {

Subspace span_of(const Field& f, std::size_t n, std::initializer_list<Vec> rows) {
  Mat m(0, n);
  for (const auto& r : rows) m.append_row(r);
  return span(f, n, m);
}

Subspace random_subspace(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rows(0, n);
  return span(f, n, oracle::random_matrix(f, rows(rng), n, rng));
}

}  // namespace

TEST_CASE("rref examples over GF(2)") {
  const Field f(1);
  auto e = rref(f, Mat::identity(2));
  CHECK(e.form == Mat::identity(2));
  CHECK(e.rank == 2);

  e = rref(f, Mat{{1, 1}, {1, 1}});
  CHECK(e.form == Mat{{1, 1}, {0, 0}});
  CHECK(e.rank == 1);

  e = rref(f, Mat{{0, 1}, {1, 0}});
  CHECK(e.form == Mat{{1, 0}, {0, 1}});
  CHECK(e.rank == 2);
}

TEST_CASE("rref leaves its input unchanged and is idempotent") {
  std::mt19937_64 rng(11);
  for (unsigned e : {1u, 2u}) {
    const Field f(e);
    for (int t = 0; t < 500; ++t) {
      const Mat m = oracle::random_matrix(f, 1 + rng() % 6, 1 + rng() % 7, rng);
      const Mat copy = m;
      const Echelon once = rref(f, m);
      CHECK(m == copy);
      CHECK(rref(f, once.form).form == once.form);
      for (std::size_t i = 0; i < once.rank; ++i) {
        CHECK(once.form(i, once.pivots[i]) == kOne);
        for (std::size_t r = 0; r < once.form.rows(); ++r) {
          if (r != i) CHECK(once.form(r, once.pivots[i]) == kZero);
        }
        if (i > 0) CHECK(once.pivots[i] > once.pivots[i - 1]);
      }
    }
  }
}

TEST_CASE("span examples") {
  const Field f(1);
  const Vec e1 = unit_vector(4, 0);
  const auto s = span_of(f, 4, {e1, e1});
  CHECK(s.dim() == 1);
  CHECK(s.basis() == Mat::from_rows(4, std::vector<Vec>{e1}));
  CHECK(span(f, 4, Mat(0, 4)).dim() == 0);
  const auto d = span(f, 2, Mat{{1, 1}});
  CHECK(d.dim() == 1);
  CHECK(d.basis() == Mat{{1, 1}});
  CHECK_THROWS_AS(span(f, 3, Mat{{1, 1}}), std::invalid_argument);
}

TEST_CASE("contains") {
  const Field f(1);
  const auto a = span_of(f, 4, {unit_vector(4, 0)});
  CHECK(contains(f, a, unit_vector(4, 0)));
  CHECK_FALSE(contains(f, a, unit_vector(4, 1)));
  CHECK(contains(f, Subspace::zero(4), Vec(4)));
  CHECK_THROWS_AS(contains(f, a, Vec(3)), std::invalid_argument);
}

TEST_CASE("sum, intersection and subset examples") {
  const Field f(1);
  const auto a = span_of(f, 4, {unit_vector(4, 0)});
  const auto b = span_of(f, 4, {unit_vector(4, 1)});
  CHECK(subspace_sum(f, a, a) == a);
  CHECK(subspace_sum(f, a, b).dim() == 2);
  CHECK(subspace_sum(f, a, b) == span_of(f, 4, {unit_vector(4, 0), unit_vector(4, 1)}));
  CHECK(subspace_sum(f, a, Subspace::zero(4)) == a);
  CHECK(subspace_intersect(f, a, a) == a);
  CHECK(subspace_intersect(f, a, b) == Subspace::zero(4));
  CHECK(is_subset(f, Subspace::zero(4), a));
  CHECK(is_subset(f, a, a));
  CHECK_FALSE(is_subset(f, a, b));
  CHECK_THROWS_AS(subspace_sum(f, a, Subspace::zero(5)), std::invalid_argument);
  CHECK_THROWS_AS(subspace_intersect(f, a, Subspace::zero(5)), std::invalid_argument);
  CHECK_THROWS_AS(is_subset(f, a, Subspace::zero(5)), std::invalid_argument);
}

TEST_CASE("intersection matches brute-force vector sets on 200 random pairs in F_2^6") {
  const Field f(1);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_subspace(f, 6, rng);
    const auto b = random_subspace(f, 6, rng);
    const auto va = oracle::vectors_of(f, a);
    const auto vb = oracle::vectors_of(f, b);
    std::size_t common = 0;
    for (const auto& v : va) common += vb.count(v);
    const auto meet = subspace_intersect(f, a, b);
    CHECK(oracle::vectors_of(f, meet).size() == common);
    CHECK(meet.dim() == oracle::log_q(common, 2));
    // Modular law.
    CHECK(subspace_sum(f, a, b).dim() + meet.dim() == a.dim() + b.dim());
    CHECK(is_subset(f, meet, a));
    CHECK(is_subset(f, meet, b));
  }
}

TEST_CASE("subset both ways is canonical equality") {
  std::mt19937_64 rng(5);
  const Field f(2);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_subspace(f, 4, rng);
    // Re-span a with a random invertible change of rows.
    Mat rows = a.basis();
    if (a.dim() >= 2) {
      for (std::size_t c = 0; c < rows.cols(); ++c) rows(0, c) = f.add(rows(0, c), f.mul(Fe{2}, rows(1, c)));
    }
    const auto a2 = span(f, 4, Mat::stack(rows, rows));
    CHECK(a2 == a);
    const auto b = random_subspace(f, 4, rng);
    CHECK((is_subset(f, a, b) && is_subset(f, b, a)) == (a == b));
  }
}

TEST_CASE("null space") {
  const Field f(1);
  const Mat m{{1, 0, 1}, {0, 1, 1}};
  const Mat k = null_space(f, m);
  CHECK(k == Mat{{1, 1, 1}});
  CHECK(null_space(f, Mat(0, 3)) == Mat::identity(3));
}

TEST_CASE("complement basis extends the lower space to the upper") {
  const Field f(2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto b = random_subspace(f, 5, rng);
    Mat sub(0, 5);
    for (std::size_t i = 0; i + 1 < b.dim(); ++i) sub.append_row(b.basis().row(i));
    const auto a = span(f, 5, sub);
    const Mat c = complement_basis(f, a, b);
    CHECK(c.rows() == b.dim() - a.dim());
    CHECK(span(f, 5, Mat::stack(a.basis(), c)) == b);
  }
  CHECK_THROWS_AS(complement_basis(f, Subspace::full(3), Subspace::zero(3)), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "pscode/enumeration.hpp"

using namespace pscode;

namespace {

Subspace random_subspace(const Field& f, std::size_t n, std::size_t maxDim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rows(0, maxDim);
  return span(f, n, oracle::random_matrix(f, rows(rng), n, rng));
}

// Number of k-dimensional subspaces of F_q^n counted as distinct vector sets
// spanned by k-tuples of vectors.
std::size_t brute_subspace_count(const Field& f, std::size_t n, std::size_t k) {
  const auto vecs = oracle::all_vectors(f, n);
  std::set<std::set<Vec>> seen;
  std::vector<std::size_t> idx(k, 0);
  const std::size_t target = [&] {
    std::size_t c = 1;
    for (std::size_t i = 0; i < k; ++i) c *= f.order();
    return c;
  }();
  while (true) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(vecs[i]);
    auto s = oracle::vectors_spanned(f, rows, n);
    if (s.size() == target) seen.insert(std::move(s));
    std::size_t p = 0;
    for (; p < k; ++p) {
      if (++idx[p] < vecs.size()) break;
      idx[p] = 0;
    }
    if (p == k) break;
  }
  return seen.size();
}

}  // namespace

TEST_CASE("interval examples") {
  const Field f(1);
  const auto a = span(f, 4, Mat{{1, 0, 1, 0}});
  const auto only = subspaces_between(f, {a, a, 1, {}});
  REQUIRE(only.size() == 1);
  CHECK(only.front() == a);
  CHECK(subspaces_between(f, {Subspace::zero(2), Subspace::full(2), 1, {}}).size() == 3);
  CHECK(subspaces_between(f, {Subspace::zero(4), Subspace::full(4), 2, {}}).size() == 35);
}

TEST_CASE("interval validation") {
  const Field f(1);
  const auto a = span(f, 3, Mat{{1, 0, 0}});
  const auto b = span(f, 3, Mat{{0, 1, 0}});
  CHECK_THROWS_AS(subspaces_between(f, {a, b, 1, {}}), std::invalid_argument);
  CHECK_THROWS_AS(subspaces_between(f, {a, Subspace::full(3), 0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(subspaces_between(f, {a, Subspace::full(3), 4, {}}), std::invalid_argument);
  CHECK_THROWS_AS(subspaces_between(f, {a, Subspace::full(4), 2, {}}), std::invalid_argument);
}

TEST_CASE("gaussian binomial against brute-force subspace counts") {
  CHECK(gaussian_binomial(5, 0, 2) == 1);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(2, 3, 2) == 0);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(gaussian_binomial(n, k, 2) == brute_subspace_count(Field(1), n, k));
    }
  }
  for (std::size_t k = 0; k <= 2; ++k) CHECK(gaussian_binomial(2, k, 4) == brute_subspace_count(Field(2), 2, k));
  CHECK(gaussian_binomial(3, 1, 4) == brute_subspace_count(Field(2), 3, 1));
}

TEST_CASE("interval enumeration is complete, sorted and duplicate-free") {
  std::mt19937_64 rng(1234);
  for (unsigned e : {1u, 2u}) {
    const Field f(e);
    for (std::size_t nu : {1u, 2u}) {
      const std::size_t n = 2 * nu + 2;
      for (int t = 0; t < 50; ++t) {
        const auto b = random_subspace(f, n, e == 1 ? n : 4, rng);
        Mat sub(0, n);
        for (std::size_t i = 0; i < b.dim(); ++i) {
          if (rng() % 2) sub.append_row(b.basis().row(i));
        }
        const auto a = span(f, n, sub);
        const std::size_t k = a.dim() + rng() % (b.dim() - a.dim() + 1);
        const auto xs = subspaces_between(f, {a, b, k, {}});
        CHECK(xs.size() == gaussian_binomial(b.dim() - a.dim(), k - a.dim(), f.order()));
        CHECK(std::is_sorted(xs.begin(), xs.end()));
        CHECK(std::adjacent_find(xs.begin(), xs.end()) == xs.end());
        for (const auto& x : xs) {
          CHECK(x.dim() == k);
          CHECK(is_subset(f, a, x));
          CHECK(is_subset(f, x, b));
        }
      }
    }
  }
}

TEST_CASE("typed enumeration: receiver-rule type in (q=2, nu=3)") {
  const PsSpace sp(Field(1), 3, 2);
  const auto rt = SubspaceType::of(2, 2, 0, 1);
  const auto from_zero = subspaces_typed(sp, {Subspace::zero(8), Subspace::full(8), 2, rt});
  CHECK(from_zero.size() == 64);
  Mat star(0, 8);
  star.append_row(sp.e_star());
  CHECK(subspaces_typed(sp, {span(sp.field(), 8, star), Subspace::full(8), 2, rt}) == from_zero);
}

TEST_CASE("typed enumeration: non-isotropic lines off e_3 in (nu=1, delta=2, q=2)") {
  const PsSpace sp(Field(1), 1, 2);
  const Field& f = sp.field();
  std::set<std::set<Vec>> lines;
  for (const auto& v : oracle::all_vectors(f, 4)) {
    if (v == Vec(4) || v == sp.e_star()) continue;
    if (oracle::bilinear(f, sp.form(), v, v) == kOne) lines.insert(oracle::vectors_spanned(f, {v}, 4));
  }
  const auto typed = subspaces_typed(sp, {Subspace::zero(4), Subspace::full(4), 1, SubspaceType::of(1, 1, 0, 0)});
  CHECK(typed.size() == lines.size());
  CHECK(typed.size() == 8);
  for (const auto& x : typed) CHECK(lines.count(oracle::vectors_of(f, x)) == 1);
}

TEST_CASE("typed enumeration with an infeasible filter is empty") {
  const PsSpace sp(Field(1), 1, 2);
  CHECK(subspaces_typed(sp, {Subspace::zero(4), Subspace::full(4), 1, SubspaceType::of(2, 2, 0, 1)}).empty());
  CHECK(subspaces_typed(sp, {Subspace::zero(4), Subspace::full(4), 1, SubspaceType{1, 2, 0, 2, 0}}).empty());
  CHECK_THROWS_AS(subspaces_typed(sp, {Subspace::zero(4), Subspace::full(4), 1, std::nullopt}),
                  std::invalid_argument);
}

TEST_CASE("count_N examples") {
  for (unsigned e : {1u, 2u}) CHECK(count_N(2, 1, 2, Field(e)) == 1);
  CHECK(count_N(1, 0, 2, Field(1)) == 3);
  CHECK(count_N(2, 1, 4, Field(1)) == 20);
  CHECK(count_N(0, 0, 0, Field(1)) == 1);
  CHECK(count_N(3, 2, 4, Field(1)) == 0);  // 2s > m
  CHECK(count_N(3, 0, 4, Field(1)) == 0);  // m - s > nu
  CHECK_THROWS_AS(count_N(1, 0, 3, Field(1)), std::invalid_argument);
}

TEST_CASE("count_N oracle examples") {
  CHECK(count_N_oracle(2, 1, 2, Field(1)) == 1);
  CHECK(count_N_oracle(2, 0, 4, Field(1)) == 15);
  CHECK(count_N_oracle(2, 0, 4, Field(1)) == gaussian_binomial(4, 2, 2) - count_N_oracle(2, 1, 4, Field(1)));
  CHECK(count_N_oracle(0, 0, 0, Field(1)) == 1);
  CHECK_THROWS_AS(count_N_oracle(1, 0, 3, Field(1)), std::invalid_argument);
}

TEST_CASE("oracle refuses instead of truncating") {
  try {
    count_N_oracle(3, 1, 8, Field(1), 100);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == gaussian_binomial(8, 3, 2));
    CHECK(std::string(e.what()).find(gaussian_binomial(8, 3, 2).str()) != std::string::npos);
  }
}

TEST_CASE("closed form matches the oracle and partitions all subspaces") {
  struct Range {
    unsigned e;
    std::size_t nDim;
  };
  for (const auto& r : {Range{1, 2}, Range{1, 4}, Range{2, 2}, Range{2, 4}, Range{1, 6}}) {
    const Field f(r.e);
    for (std::size_t m = 0; m <= r.nDim; ++m) {
      BigInt total = 0;
      for (std::size_t s = 0; 2 * s <= m; ++s) {
        CAPTURE(m);
        CAPTURE(s);
        const BigInt closed = count_N(m, s, r.nDim, f);
        CHECK(closed == count_N_oracle(m, s, r.nDim, f));
        CHECK((closed > 0) == anzahl_feasible(m, s, r.nDim));
        total += closed;
      }
      CHECK(total == gaussian_binomial(r.nDim, m, f.order()));
    }
  }
}

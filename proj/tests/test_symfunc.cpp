#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "stabilab/characters.hpp"
#include "stabilab/multiplicities.hpp"
#include "stabilab/symfunc.hpp"

using namespace stabilab;

namespace {

MultigradedSeries series(int k, int bound, std::initializer_list<std::pair<ExponentVector, long>> terms) {
  MultigradedSeries out(k, bound);
  for (const auto& [e, c] : terms) out.add(e, c);
  return out;
}

// Semistandard fillings of mu by non-negative integers with entry sum d.
long ssyt_with_sum(const std::vector<int>& mu, int d) {
  std::vector<std::vector<int>> t(mu.size());
  for (std::size_t r = 0; r < mu.size(); ++r) t[r].assign(static_cast<std::size_t>(mu[r]), 0);
  long count = 0;
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t r, std::size_t c, int left) {
    if (r == mu.size()) {
      count += left == 0;
      return;
    }
    if (c == static_cast<std::size_t>(mu[r])) {
      rec(r + 1, 0, left);
      return;
    }
    int lo = 0;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= left; ++v) {
      t[r][c] = v;
      rec(r, c + 1, left - v);
    }
  };
  rec(0, 0, d);
  return count;
}

}  // namespace

TEST_CASE("q-series helpers") {
  CHECK(qseries_one_minus_power(1, -1, 4) == QSeries{1, 1, 1, 1, 1});
  CHECK(qseries_one_minus_power(2, 2, 5) == QSeries{1, 0, -2, 0, 1, 0});
  CHECK(qseries_one_minus_power(1, -2, 3) == QSeries{1, 2, 3, 4});
  CHECK(qseries_multiply({1, 1}, {1, -1}, 3) == QSeries{1, 0, -1, 0});
}

TEST_CASE("multigraded series arithmetic and JSON") {
  const auto a = series(2, 3, {{{1, 0}, 1}, {{0, 1}, 2}});
  const auto b = series(2, 3, {{{1, 0}, -1}});
  CHECK((a + b) == series(2, 3, {{{0, 1}, 2}}));
  CHECK((a * a).coeff({1, 1}) == 4);
  CHECK(a.component(1) == a);
  CHECK(MultigradedSeries::from_json(2, 3, a.to_json()) == a);
  auto c = a;
  c.add({3, 1}, 5);  // above the bound
  CHECK(c == a);
}

TEST_CASE("schur_poly") {
  CHECK(schur_poly({2}, 2) == series(2, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  CHECK(schur_poly({1, 1}, 2) == series(2, 2, {{{1, 1}, 1}}));
  CHECK(schur_poly({1, 1, 1}, 2).is_zero());
  for (int k = 1; k <= 3; ++k) {
    for (int d = 1; d <= 5; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        const auto s = schur_poly(lambda, k);
        for (const auto& L : enumerate_exponent_vectors(k, d)) {
          CHECK(s.coeff(L) == oracle::count_ssyt(lambda.parts(), L));
        }
        // Specializing every q_i to 1 gives the GL(k) dimension.
        BigInt total = 0;
        for (const auto& [e, c] : s.coefficients()) total += c;
        CHECK(Rational(total) ==
              weyl_trace(lambda, CycleType(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)))));
      }
    }
  }
}

TEST_CASE("plethysm_series") {
  CHECK(plethysm_series({1}, 1, 3).total_degree_coefficients() == QSeries{1, 1, 1, 1});
  CHECK(plethysm_series({2}, 1, 2).total_degree_coefficients() == QSeries{1, 1, 2});
  CHECK(plethysm_series({1, 1}, 1, 3).total_degree_coefficients() == QSeries{0, 1, 1, 2});

  // One variable set: integer fillings.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      const QSeries got = plethysm_series(mu, 1, 6).total_degree_coefficients();
      for (int d = 0; d <= 6; ++d) CHECK(got[static_cast<std::size_t>(d)] == ssyt_with_sum(mu.parts(), d));
    }
  }
}

TEST_CASE("plethysm filling orders agree") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        CHECK(plethysm_series(mu, k, 4, FillingOrder::graded_lex) ==
              plethysm_series(mu, k, 4, FillingOrder::graded_revlex));
      }
    }
  }
}

TEST_CASE("plethysm coefficients are brute-force multigraded multiplicities") {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        const auto s = plethysm_series(mu, k, 3);
        for (int d = 0; d <= 3; ++d) {
          for (const auto& L : enumerate_exponent_vectors(k, d)) {
            CHECK(s.coeff(L) == oracle::multigraded_multiplicity(mu.parts(), L));
          }
        }
      }
    }
  }
}

TEST_CASE("plethysm total degree matches summed class-sum multiplicities") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        const QSeries totals = plethysm_series(mu, k, 4).total_degree_coefficients();
        for (int d = 0; d <= 4; ++d) {
          BigInt sum = 0;
          for (const auto& L : enumerate_exponent_vectors(k, d)) sum += m_mu_L(mu, L);
          CHECK(totals[static_cast<std::size_t>(d)] == sum);
        }
      }
    }
  }
}

TEST_CASE("product_series") {
  CHECK(product_series(1, 5) == QSeries{1, 1, 2, 3, 5, 7});
  CHECK(product_series(2, 2) == QSeries{1, 2, 6});
  for (int k = 1; k <= 5; ++k) CHECK(product_series(k, 3)[1] == k);
  const QSeries p = product_series(1, 12);
  for (int d = 0; d <= 12; ++d) CHECK(p[static_cast<std::size_t>(d)] == oracle::count_partitions(d));
}

TEST_CASE("schur_expand") {
  CHECK(schur_expand(schur_poly({2, 1}, 3)) == std::map<Partition, BigInt>{{Partition{2, 1}, 1}});
  const auto p2 = series(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
  CHECK(schur_expand(p2) == std::map<Partition, BigInt>{{Partition{2}, 1}, {Partition{1, 1}, -1}});
  CHECK(schur_expand(series(2, 2, {{{1, 1}, 1}})) == std::map<Partition, BigInt>{{Partition{1, 1}, 1}});
  CHECK_THROWS_AS(schur_expand(series(2, 2, {{{2, 0}, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(schur_expand(series(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 0}, 1}})), std::invalid_argument);

  // Round trip on random-looking combinations.
  const auto combo = schur_poly({3, 1}, 3).scaled(2) - schur_poly({2, 2}, 3) + schur_poly({2, 1, 1}, 3).scaled(5);
  CHECK(schur_expand(combo) ==
        std::map<Partition, BigInt>{{Partition{3, 1}, 2}, {Partition{2, 2}, -1}, {Partition{2, 1, 1}, 5}});
}

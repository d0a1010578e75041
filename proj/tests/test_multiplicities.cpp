#include "doctest.h"
#include "oracles.hpp"
#include "stabilab/multiplicities.hpp"

using namespace stabilab;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// Multiplicity of the S_n-invariants in F^lambda for lambda a row or a column,
// by averaging brute-force traces over every permutation.
long brute_invariants(const Partition& lambda, int n) {
  long total = 0;
  const auto perms = oracle::permutations(n);
  for (const auto& sigma : perms) {
    if (lambda.length() <= 1) {
      total += oracle::fixed_monomials(sigma, lambda.size());
    } else {
      total += oracle::exterior_trace(sigma, lambda.size());
    }
  }
  return total / static_cast<long>(perms.size());
}

}  // namespace

TEST_CASE("invariant_dim") {
  for (int n = 2; n <= 5; ++n) {
    for (auto method : {InvariantMethod::enumeration, InvariantMethod::molien}) {
      CHECK(invariant_dim(n, 2, 2, method) == 6);
      for (int k = 1; k <= 3; ++k) CHECK(invariant_dim(n, k, 1, method) == k);
      if (n >= 3) CHECK(invariant_dim(n, 2, 3, method) == 14);
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int d = 0; d <= 3; ++d) {
        const long brute = oracle::orbit_count(n, k, d);
        CHECK(invariant_dim(n, k, d, InvariantMethod::enumeration) == brute);
        CHECK(invariant_dim(n, k, d, InvariantMethod::molien) == brute);
      }
    }
  }
}

TEST_CASE("weyl_invariant_dim") {
  for (int n = 1; n <= 6; ++n) CHECK(weyl_invariant_dim({1}, n) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(weyl_invariant_dim({1, 1}, n) == 0);
  for (int n = 3; n <= 6; ++n) CHECK(weyl_invariant_dim({2, 1}, n) == 1);
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 4; ++d) {
      CHECK(weyl_invariant_dim({d}, n) == brute_invariants({d}, n));
      if (d <= n) CHECK(weyl_invariant_dim(ones(d), n) == brute_invariants(ones(d), n));
    }
  }
}

TEST_CASE("g_coeff") {
  for (int n = 2; n <= 6; ++n) CHECK(g_coeff({1}, Partition{n - 1, 1}) == 1);
  CHECK(g_coeff({2}, {2}) == 2);
  CHECK(g_coeff({2, 1}, {3}) == 1);
  CHECK(g_coeff({2, 1}, {3}) == weyl_invariant_dim({2, 1}, 3));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      for (int d = 0; d <= 3; ++d) {
        const Partition row = d == 0 ? Partition{} : Partition{d};
        CHECK(g_coeff(row, mu) == oracle::multigraded_multiplicity(mu.parts(), {d}));
      }
    }
  }
}

TEST_CASE("g_via_plethysm") {
  for (int n = 1; n <= 5; ++n) {
    const auto g = g_via_plethysm(Partition{n}, 2, 1);
    CHECK(g.at(Partition{1}) == 1);
  }
  const auto g3 = g_via_plethysm({3}, 2, 3);
  std::map<Partition, BigInt> degree3;
  for (const auto& [lambda, c] : g3) {
    if (lambda.size() == 3) degree3[lambda] = c;
  }
  CHECK(degree3 == std::map<Partition, BigInt>{{Partition{3}, 3}, {Partition{2, 1}, 1}});
  // Duality sum 4*3 + 2*1 = |P^{3,2}_3|.
  CHECK(invariant_dim(3, 2, 3, InvariantMethod::enumeration) == 14);

  const QSeries row = plethysm_series({2}, 1, 5).total_degree_coefficients();
  const auto g2 = g_via_plethysm({2}, 1, 5);
  for (int d = 1; d <= 5; ++d) {
    const auto it = g2.find(Partition{d});
    CHECK((it == g2.end() ? BigInt(0) : it->second) == row[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("m_mu_L") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(m_mu_L(Partition{n - 1, 1}, {1}) == 1);
    CHECK(m_mu_L(Partition{n}, {1, 1}) == 2);
    for (int d = 0; d <= n; ++d) CHECK(m_mu_L(Partition{n}, {d}) == oracle::count_partitions(d));
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      for (const ExponentVector& L : {ExponentVector{2}, ExponentVector{1, 2}, ExponentVector{2, 0, 1}}) {
        CHECK(m_mu_L(mu, L) == oracle::multigraded_multiplicity(mu.parts(), L));
      }
    }
  }
}

TEST_CASE("multiplicities weighted by dimension recover dim V_L") {
  for (int n = 1; n <= 6; ++n) {
    const CharacterTable& table = default_characters().table(n);
    for (const ExponentVector& L : {ExponentVector{3}, ExponentVector{2, 1}, ExponentVector{1, 1, 2}, ExponentVector{0, 4}}) {
      BigInt total = 0;
      for (const auto& mu : enumerate_partitions(n)) total += m_mu_L(mu, L) * static_cast<long>(table.value(mu, ones(n)));
      BigInt expected = 1;
      for (int l : L) expected *= binomial(l + n - 1, n - 1);
      CHECK(total == expected);
    }
  }
}

TEST_CASE("duality consistency") {
  for (int k = 1; k <= 3; ++k) {
    const CycleType identity(ones(k));
    for (int n = 1; n <= 6; ++n) {
      for (int r = 0; r <= n; ++r) {
        Rational total = 0;
        for (const auto& lambda : enumerate_partitions(r, k)) {
          total += weyl_trace(lambda, identity) * Rational(weyl_invariant_dim(lambda, n));
        }
        CHECK(Rational(invariant_dim(n, k, r, InvariantMethod::molien)) == total);
      }
    }
  }
}

TEST_CASE("monotonicity in n") {
  for (int d = 0; d <= 5; ++d) {
    for (const auto& lambda : enumerate_partitions(d)) {
      for (int m = std::max(d, 1); m <= 7; ++m) {
        for (int n = m; n <= 7; ++n) CHECK(weyl_invariant_dim(lambda, m) >= weyl_invariant_dim(lambda, n));
      }
    }
  }
  // Below |lambda| the inequality can fail: S^2 has one invariant for n = 1
  // and two for n = 2.
  CHECK(weyl_invariant_dim({2}, 1) == 1);
  CHECK(weyl_invariant_dim({2}, 2) == 2);
}

TEST_CASE("stability suites pass") {
  for (const auto& report : verify_stability_suite(2, 5, 3)) {
    INFO(report.statement());
    CHECK(report.pass());
    CHECK(!report.instances().empty());
  }
  for (const auto& report : verify_stability_suite(1, 8, 2)) {
    INFO(report.statement());
    CHECK(report.pass());
  }
}

TEST_CASE("an injected perturbation is detected and located") {
  const Perturbation p{"weyl-stability", 7, 1};
  bool found = false;
  for (const auto& report : verify_stability_suite(2, 4, 1, p)) {
    if (report.statement() != "weyl-stability") {
      CHECK(report.pass());
      continue;
    }
    found = true;
    CHECK_FALSE(report.pass());
    REQUIRE(report.first_failure().has_value());
    CHECK(report.first_failure()->lhs == report.first_failure()->rhs + 1);
    CHECK(report.first_failure()->params == report.instances()[7].params);
  }
  CHECK(found);
}

#include <filesystem>

#include "doctest.h"
#include "oracles.hpp"
#include "stabilab/characters.hpp"

using namespace stabilab;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("stabilab-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

// Distinct rearrangements of xi padded with zeros to length n.
BigInt rearrangements(std::vector<int> xi, int n) {
  xi.resize(static_cast<std::size_t>(n), 0);
  BigInt out = factorial(n);
  std::map<int, int> counts;
  for (int v : xi) ++counts[v];
  for (const auto& [v, c] : counts) out /= factorial(c);
  return out;
}

}  // namespace

TEST_CASE("character of (2,1)") {
  const CharacterTable table = character_table(3);
  CHECK(table.value({2, 1}, {1, 1, 1}) == 2);
  CHECK(table.value({2, 1}, {2, 1}) == 0);
  CHECK(table.value({2, 1}, {3}) == -1);
  // Natural representation minus the trivial one.
  for (const auto& type : cycle_types(3)) {
    const auto sigma = type.representative();
    long fixed = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) fixed += sigma[i] == static_cast<int>(i);
    CHECK(table.value({2, 1}, type.shape()) == fixed - 1);
  }
}

TEST_CASE("Murnaghan-Nakayama agrees with Young's rule tables") {
  for (int n = 1; n <= 6; ++n) {
    const auto reference = oracle::character_table(n);
    const CharacterTable table = character_table(n);
    for (const auto& [key, value] : reference) {
      CHECK(table.value(Partition(key.first), Partition(key.second)) == value);
    }
  }
}

TEST_CASE("orthogonality for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable table = character_table(n);
    for (std::size_t a = 0; a < table.partitions().size(); ++a) {
      for (std::size_t b = 0; b < table.partitions().size(); ++b) {
        Rational total = 0;
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
          total += Rational(static_cast<long>(table.at(a, c) * table.at(b, c))) / Rational(table.classes()[c].centralizer_order());
        }
        CHECK(total == (a == b ? 1 : 0));
      }
    }
  }
}

TEST_CASE("character table cap and serialization") {
  CHECK_THROWS_AS(character_table(kMaxCharacterDegree + 1), ResourceError);
  const CharacterTable table = character_table(5);
  const CharacterTable back = CharacterTable::from_json(table.to_json());
  for (std::size_t a = 0; a < table.partitions().size(); ++a) {
    for (std::size_t c = 0; c < table.classes().size(); ++c) CHECK(back.at(a, c) == table.at(a, c));
  }
}

TEST_CASE("registry caches tables on disk") {
  const auto dir = fresh_dir("registry");
  {
    CharacterRegistry registry{CacheDirectory(dir)};
    CHECK(registry.table(4).value({3, 1}, {1, 1, 1, 1}) == 3);
  }
  CHECK(std::filesystem::exists(dir / "characters" / "n4.json"));
  CharacterRegistry again{CacheDirectory(dir)};
  CHECK(again.table(4).value({2, 2}, {2, 2}) == 2);

  // Tables loaded before a cache is attached are persisted on attach.
  const auto late = fresh_dir("registry-late");
  CharacterRegistry registry;
  registry.table(3);
  registry.attach_cache(CacheDirectory(late));
  CHECK(std::filesystem::exists(late / "characters" / "n3.json"));
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(late);
}

TEST_CASE("power_sum_trace") {
  CHECK(power_sum_trace(2, CycleType(Partition{2, 1})) == 3);
  CHECK(power_sum_trace(3, CycleType(Partition{3})) == 3);
  for (const auto& type : cycle_types(5)) CHECK(power_sum_trace(1, type) == type.multiplicity(1));
}

TEST_CASE("weyl_trace") {
  CHECK(weyl_trace({2}, CycleType(Partition{2})) == 1);
  CHECK(weyl_trace({1, 1}, CycleType(Partition{2})) == -1);
  CHECK(weyl_trace({2, 1}, CycleType(Partition{1, 1, 1})) == 8);
  CHECK(weyl_trace({}, CycleType(Partition{2, 1})) == 1);

  // Symmetric and exterior powers against brute-force traces.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& type : cycle_types(n)) {
      const auto sigma = oracle::permutation_of_type(type.shape().parts());
      for (int d = 0; d <= 4; ++d) {
        CHECK(weyl_trace(Partition(d == 0 ? std::vector<int>{} : std::vector<int>{d}), type) ==
              oracle::fixed_monomials(sigma, d));
        if (d >= 1) {
          CHECK(weyl_trace(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), type) ==
                oracle::exterior_trace(sigma, d));
        }
      }
    }
  }
  // Dimensions against tableau counts.
  for (int n = 1; n <= 4; ++n) {
    const CycleType identity(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (int d = 1; d <= 5; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        CHECK(weyl_trace(lambda, identity) == oracle::count_ssyt_entries(lambda.parts(), n));
      }
    }
  }
}

TEST_CASE("kostka") {
  CHECK(kostka({2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka({3}, Partition{2, 1}) == 1);
  CHECK(kostka({2, 2}, Partition{3, 1}) == 0);
  CHECK_THROWS_AS(kostka({2, 1}, Partition{2}), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& xi : enumerate_partitions(n)) {
        CHECK(kostka(lambda, xi) == oracle::count_ssyt(lambda.parts(), xi.parts()));
      }
    }
  }
  // Compositions with zeros.
  const std::vector<int> content{0, 2, 0, 1};
  CHECK(kostka({2, 1}, std::span<const int>(content)) == 1);
}

TEST_CASE("Kostka length lemma") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& xi : enumerate_partitions(n)) {
        if (kostka(lambda, xi) > 0) {
          CHECK(xi.length() >= lambda.length());
          CHECK(dominates(lambda, xi));
        }
      }
    }
  }
}

TEST_CASE("induced-dimension identity") {
  // dim of F^lambda on C^n equals sum_xi K(lambda, xi) times the number of
  // distinct rearrangements of xi in Z^n.
  for (int n = 1; n <= 6; ++n) {
    const CycleType identity(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (int d = 0; d <= 6; ++d) {
      for (const auto& lambda : enumerate_partitions(d, n)) {
        BigInt total = 0;
        for (const auto& xi : enumerate_partitions(d, n)) total += kostka(lambda, xi) * rearrangements(xi.parts(), n);
        CHECK(weyl_trace(lambda, identity) == Rational(total));
      }
    }
  }
}

TEST_CASE("pieri_expand") {
  CHECK(pieri_expand({1}, 1) == std::vector<Partition>{{1, 1}, {2}});
  CHECK(pieri_expand({2, 1}, 0) == std::vector<Partition>{{2, 1}});
  const std::vector<Partition> expected{{2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}};
  CHECK(pieri_expand({2, 1}, 2) == expected);

  // Brute force: mu is in the expansion iff mu/eta is a horizontal strip,
  // i.e. eta_i <= mu_i <= eta_{i-1} componentwise.
  for (int e = 0; e <= 5; ++e) {
    for (const auto& eta : enumerate_partitions(e)) {
      for (int j = 0; j <= 4; ++j) {
        std::vector<Partition> brute;
        for (const auto& mu : enumerate_partitions(e + j)) {
          bool strip = mu.length() <= eta.length() + 1;
          for (int i = 0; i < mu.length() && strip; ++i) {
            strip = mu[static_cast<std::size_t>(i)] >= eta[static_cast<std::size_t>(i)] &&
                    (i == 0 || mu[static_cast<std::size_t>(i)] <= eta[static_cast<std::size_t>(i - 1)]);
          }
          if (strip && mu.length() >= eta.length()) brute.push_back(mu);
        }
        std::sort(brute.begin(), brute.end());
        CHECK(pieri_expand(eta, j) == brute);
      }
    }
  }
}

TEST_CASE("Pieri monotonicity") {
  for (int e = 0; e <= 5; ++e) {
    for (const auto& eta : enumerate_partitions(e)) {
      for (int j = 0; j <= 3; ++j) {
        for (const auto& mu : pieri_expand(eta, j)) {
          for (int r = 0; r <= 3; ++r) {
            const auto wider = pieri_expand(eta, j + r);
            CHECK(std::find(wider.begin(), wider.end(), bump_first_part(mu, r)) != wider.end());
          }
        }
      }
    }
  }
}

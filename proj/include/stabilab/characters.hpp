#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "stabilab/cache.hpp"
#include "stabilab/common.hpp"
#include "stabilab/partitions.hpp"

namespace stabilab {

inline constexpr int kMaxCharacterDegree = 24;

// Irreducible characters of S_n. Rows and columns are both indexed by
// enumerate_partitions(n): rows by the irreducible V^mu, columns by cycle
// type.
class CharacterTable {
 public:
  CharacterTable(int n, std::vector<std::vector<long long>> values);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<CycleType>& classes() const { return classes_; }

  std::size_t index_of(const Partition& p) const;
  long long at(std::size_t irrep, std::size_t cls) const { return values_[irrep][cls]; }
  long long value(const Partition& irrep, const Partition& cls) const {
    return at(index_of(irrep), index_of(cls));
  }
  const std::vector<long long>& row(const Partition& irrep) const {
    return values_[index_of(irrep)];
  }

  nlohmann::json to_json() const;
  // Throws std::invalid_argument on a malformed document.
  static CharacterTable from_json(const nlohmann::json& doc);

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<CycleType> classes_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<long long>> values_;
};

// Murnaghan-Nakayama evaluation of chi^lambda at cycle type rho.
long long mn_character(const Partition& lambda, const Partition& rho);

// Full table for S_n; ResourceError above kMaxCharacterDegree.
CharacterTable character_table(int n);

// Thread-safe memo of character tables, optionally persisted to a cache
// directory under "characters/n<N>".
class CharacterRegistry {
 public:
  CharacterRegistry() = default;
  explicit CharacterRegistry(std::optional<CacheDirectory> cache) : cache_(std::move(cache)) {}

  void attach_cache(std::optional<CacheDirectory> cache);
  const CharacterTable& table(int n);

 private:
  std::mutex mutex_;
  std::optional<CacheDirectory> cache_;
  std::map<int, std::unique_ptr<CharacterTable>> tables_;
};

CharacterRegistry& default_characters();

// p_r evaluated at the eigenvalues of a permutation of type tau, i.e. the
// number of fixed points of sigma^r.
long long power_sum_trace(int r, const CycleType& tau);

// Trace of a permutation of type tau on the GL(n) module with highest weight
// lambda (n = |tau|), via the power-sum expansion of s_lambda.
Rational weyl_trace(const Partition& lambda, const CycleType& tau,
                    CharacterRegistry& registry = default_characters());

// Semistandard tableaux of shape lambda and content `content` (a
// composition; zeros allowed). Throws std::invalid_argument on size mismatch.
BigInt kostka(const Partition& lambda, std::span<const int> content);
inline BigInt kostka(const Partition& lambda, const Partition& content) {
  return kostka(lambda, std::span<const int>(content.parts()));
}

// All mu with mu/eta a horizontal strip of size j, sorted.
std::vector<Partition> pieri_expand(const Partition& eta, int j);

}  // namespace stabilab

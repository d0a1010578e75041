#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabilab/common.hpp"

namespace stabilab {

// Weakly decreasing sequence of positive integers. The partition of zero is
// the empty sequence.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Sorts and drops zeros; rejects negative entries.
  static Partition from_unsorted(std::vector<int> entries);
  // Parses "3+1", "3,1", "[3,1]" or "" / "0" / "[]" for the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Zero beyond the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  // Number of parts equal to d.
  int multiplicity(int d) const;

  // "3+1" for (3,1); "" for the empty partition.
  std::string key() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts; used for container keys.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

// All partitions of n, optionally with at most max_length parts, in reverse
// lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n,
                                            std::optional<int> max_length = std::nullopt);

// Prefix-sum comparison after padding the shorter vector with zeros.
bool dominates(std::span<const int> lhs, std::span<const int> rhs);
bool dominates(const Partition& lhs, const Partition& rhs);

// (mu_1 + r, mu_2, ...); the empty partition with r > 0 gives (r).
Partition bump_first_part(const Partition& mu, int r);

// Element of Z^k_{>=0}.
using ExponentVector = std::vector<int>;

int degree(const ExponentVector& a);

// All a in Z^k_{>=0} with |a| = d, in lexicographically decreasing order.
std::vector<ExponentVector> enumerate_exponent_vectors(int k, int d);

// Multiset of n exponent vectors, stored sorted ascending (lexicographic).
class Profile {
 public:
  explicit Profile(std::vector<ExponentVector> vectors);

  const std::vector<ExponentVector>& vectors() const { return vectors_; }
  int total_degree() const;
  int count() const { return static_cast<int>(vectors_.size()); }

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile& a, const Profile& b) {
    return a.vectors_ <=> b.vectors_;
  }

 private:
  std::vector<ExponentVector> vectors_;
};

void to_json(nlohmann::json& j, const Profile& p);

// All multisets of n vectors in Z^k_{>=0} of total degree d, canonicalized.
std::vector<Profile> enumerate_profiles(int n, int k, int d);

// Conjugacy class data for S_n.
class CycleType {
 public:
  explicit CycleType(Partition shape);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  int multiplicity(int d) const { return shape_.multiplicity(d); }
  // prod_d d^{m_d} m_d!
  const BigInt& centralizer_order() const { return centralizer_; }
  // n! / z
  BigInt class_size() const;
  // A permutation of {0..n-1} with this cycle type: cycles laid out
  // consecutively in part order.
  std::vector<int> representative() const;

 private:
  Partition shape_;
  BigInt centralizer_;
};

std::vector<CycleType> cycle_types(int n);

}  // namespace stabilab

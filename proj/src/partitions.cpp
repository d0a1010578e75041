#include "stabilab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stabilab {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt require_integer(const Rational& value, const std::string& what) {
  if (value.get_den() != 1) {
    throw ConsistencyError(what + " is not an integer: " + value.get_str());
  }
  return value.get_num();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> entries) {
  if (std::ranges::any_of(entries, [](int v) { return v < 0; })) {
    throw std::invalid_argument("negative entry in partition");
  }
  std::erase(entries, 0);
  std::ranges::sort(entries, std::greater<>());
  return Partition(std::move(entries));
}

Partition Partition::parse(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
    cleaned.push_back(c == '+' ? ',' : c);
  }
  std::vector<int> parts;
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse partition '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("cannot parse partition '" + text + "'");
    if (v != 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int d) const {
  return static_cast<int>(std::ranges::count(parts_, d));
}

std::string Partition::key() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out.push_back('+');
    out += std::to_string(parts_[i]);
  }
  return out;
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

namespace {

void partitions_rec(int remaining, int max_part, std::optional<int> max_length,
                    std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (max_length && static_cast<int>(current.size()) >= *max_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, max_length, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_length) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, max_length, current, out);
  return out;
}

bool dominates(std::span<const int> lhs, std::span<const int> rhs) {
  const std::size_t len = std::max(lhs.size(), rhs.size());
  long long a = 0;
  long long b = 0;
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lhs.size() ? lhs[i] : 0;
    b += i < rhs.size() ? rhs[i] : 0;
    if (a < b) return false;
  }
  return true;
}

bool dominates(const Partition& lhs, const Partition& rhs) {
  return dominates(std::span<const int>(lhs.parts()), std::span<const int>(rhs.parts()));
}

Partition bump_first_part(const Partition& mu, int r) {
  if (r < 0) throw std::invalid_argument("bump_first_part: negative shift");
  if (r == 0) return mu;
  std::vector<int> parts = mu.parts();
  if (parts.empty()) {
    parts.push_back(r);
  } else {
    parts[0] += r;
  }
  return Partition(std::move(parts));
}

int degree(const ExponentVector& a) { return std::accumulate(a.begin(), a.end(), 0); }

namespace {

void exponent_rec(int k, int remaining, ExponentVector& current,
                  std::vector<ExponentVector>& out) {
  const int pos = static_cast<int>(current.size());
  if (pos == k - 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current.push_back(v);
    exponent_rec(k, remaining - v, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> enumerate_exponent_vectors(int k, int d) {
  if (k < 1) throw std::invalid_argument("exponent vectors need k >= 1");
  if (d < 0) return {};
  std::vector<ExponentVector> out;
  ExponentVector current;
  exponent_rec(k, d, current, out);
  return out;
}

Profile::Profile(std::vector<ExponentVector> vectors) : vectors_(std::move(vectors)) {
  std::ranges::sort(vectors_);
}

int Profile::total_degree() const {
  int total = 0;
  for (const auto& v : vectors_) total += degree(v);
  return total;
}

void to_json(nlohmann::json& j, const Profile& p) { j = p.vectors(); }

namespace {

// Chooses nonzero vectors in nonincreasing position order from `pool`.
void profile_rec(const std::vector<ExponentVector>& pool, std::size_t start, int remaining,
                 int slots, std::vector<ExponentVector>& chosen,
                 std::vector<std::vector<ExponentVector>>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  if (slots == 0) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    const int deg = degree(pool[i]);
    if (deg > remaining) continue;
    chosen.push_back(pool[i]);
    profile_rec(pool, i, remaining - deg, slots - 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Profile> enumerate_profiles(int n, int k, int d) {
  if (n < 1 || k < 1) throw std::invalid_argument("enumerate_profiles needs n, k >= 1");
  if (d < 0) return {};
  std::vector<ExponentVector> pool;
  for (int deg = 1; deg <= d; ++deg) {
    for (auto& v : enumerate_exponent_vectors(k, deg)) pool.push_back(std::move(v));
  }
  std::vector<std::vector<ExponentVector>> raw;
  std::vector<ExponentVector> chosen;
  profile_rec(pool, 0, d, n, chosen, raw);

  std::vector<Profile> out;
  out.reserve(raw.size());
  for (auto& vectors : raw) {
    vectors.resize(static_cast<std::size_t>(n), ExponentVector(static_cast<std::size_t>(k), 0));
    out.emplace_back(std::move(vectors));
  }
  std::ranges::sort(out);
  return out;
}

CycleType::CycleType(Partition shape) : shape_(std::move(shape)), centralizer_(1) {
  for (int d = 1; d <= shape_.size(); ++d) {
    const int m = shape_.multiplicity(d);
    if (m == 0) continue;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(m));
    centralizer_ *= power * factorial(m);
  }
}

BigInt CycleType::class_size() const { return factorial(n()) / centralizer_; }

std::vector<int> CycleType::representative() const {
  std::vector<int> sigma(static_cast<std::size_t>(n()));
  int start = 0;
  for (int len : shape_.parts()) {
    for (int i = 0; i < len; ++i) {
      sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    }
    start += len;
  }
  return sigma;
}

std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  for (auto& p : enumerate_partitions(n)) out.emplace_back(std::move(p));
  return out;
}

}  // namespace stabilab

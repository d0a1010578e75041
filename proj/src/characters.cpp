#include "stabilab/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stabilab {

CharacterTable::CharacterTable(int n, std::vector<std::vector<long long>> values)
    : n_(n), partitions_(enumerate_partitions(n)), values_(std::move(values)) {
  for (const auto& p : partitions_) classes_.emplace_back(p);
  for (std::size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i], i);
  if (values_.size() != partitions_.size()) {
    throw std::invalid_argument("character table has wrong number of rows");
  }
  for (const auto& row : values_) {
    if (row.size() != partitions_.size()) {
      throw std::invalid_argument("character table has wrong number of columns");
    }
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw std::invalid_argument("'" + p.key() + "' is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json doc;
  doc["n"] = n_;
  doc["classes"] = nlohmann::json::array();
  for (const auto& p : partitions_) doc["classes"].push_back(p.parts());
  doc["rows"] = nlohmann::json::object();
  for (std::size_t i = 0; i < partitions_.size(); ++i) {
    doc["rows"][partitions_[i].key()] = values_[i];
  }
  return doc;
}

CharacterTable CharacterTable::from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const auto partitions = enumerate_partitions(n);
    std::vector<std::size_t> column_of;
    const auto& classes = doc.at("classes");
    if (classes.size() != partitions.size()) throw std::invalid_argument("class count mismatch");
    std::map<Partition, std::size_t> stored_column;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      stored_column.emplace(Partition(classes[c].get<std::vector<int>>()), c);
    }
    std::vector<std::vector<long long>> values;
    for (const auto& irrep : partitions) {
      const auto stored = doc.at("rows").at(irrep.key()).get<std::vector<long long>>();
      std::vector<long long> row;
      for (const auto& cls : partitions) row.push_back(stored.at(stored_column.at(cls)));
      values.push_back(std::move(row));
    }
    return CharacterTable(n, std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed character table: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed character table: ") + e.what());
  }
}

namespace {

// Beta-set (first-column hook lengths) of lambda padded to `len` parts.
std::vector<int> beta_set(const std::vector<int>& parts, std::size_t len) {
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int part = i < parts.size() ? parts[i] : 0;
    beta[i] = part + static_cast<int>(len - 1 - i);
  }
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::ranges::sort(beta, std::greater<>());
  const std::size_t len = beta.size();
  std::vector<int> parts;
  for (std::size_t i = 0; i < len; ++i) {
    const int part = beta[i] - static_cast<int>(len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using MnKey = std::pair<std::vector<int>, std::size_t>;

long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t pos,
                 std::map<MnKey, long long>& memo) {
  if (pos == rho.size()) return lambda.empty() ? 1 : 0;
  MnKey key{lambda, pos};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = rho[pos];
  const std::vector<int> beta = beta_set(lambda, lambda.size());
  const std::set<int> beads(beta.begin(), beta.end());
  long long total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || beads.contains(target)) continue;
    // Leg length: beads strictly between the new and old positions.
    int between = 0;
    for (int other : beta) {
      if (other > target && other < b) ++between;
    }
    std::vector<int> moved = beta;
    std::ranges::replace(moved, b, target);
    const long long sub = mn_rec(from_beta_set(std::move(moved)), rho, pos + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw std::invalid_argument("character arguments must partition the same n");
  }
  std::map<MnKey, long long> memo;
  return mn_rec(lambda.parts(), rho.parts(), 0, memo);
}

CharacterTable character_table(int n) {
  if (n < 1) throw std::invalid_argument("character_table needs n >= 1");
  if (n > kMaxCharacterDegree) {
    throw ResourceError("character table for n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxCharacterDegree));
  }
  const auto partitions = enumerate_partitions(n);
  std::vector<std::vector<long long>> values;
  values.reserve(partitions.size());
  // One memo per class: subproblems share the same rho suffix.
  std::vector<std::map<MnKey, long long>> memos(partitions.size());
  for (const auto& lambda : partitions) {
    std::vector<long long> row;
    row.reserve(partitions.size());
    for (std::size_t c = 0; c < partitions.size(); ++c) {
      row.push_back(mn_rec(lambda.parts(), partitions[c].parts(), 0, memos[c]));
    }
    values.push_back(std::move(row));
  }
  return CharacterTable(n, std::move(values));
}

void CharacterRegistry::attach_cache(std::optional<CacheDirectory> cache) {
  std::lock_guard lock(mutex_);
  cache_ = std::move(cache);
  if (!cache_) return;
  // Tables computed before the cache was attached are stored now.
  for (const auto& [n, table] : tables_) {
    const std::string name = "n" + std::to_string(n);
    if (!cache_->read("characters", name)) cache_->write("characters", name, table->to_json());
  }
}

const CharacterTable& CharacterRegistry::table(int n) {
  std::lock_guard lock(mutex_);
  if (auto it = tables_.find(n); it != tables_.end()) return *it->second;

  const std::string name = "n" + std::to_string(n);
  std::unique_ptr<CharacterTable> table;
  if (cache_) {
    if (auto doc = cache_->read("characters", name)) {
      try {
        table = std::make_unique<CharacterTable>(CharacterTable::from_json(*doc));
      } catch (const std::invalid_argument&) {
        table.reset();
      }
    }
  }
  if (!table) {
    table = std::make_unique<CharacterTable>(character_table(n));
    if (cache_) cache_->write("characters", name, table->to_json());
  }
  auto [it, inserted] = tables_.emplace(n, std::move(table));
  return *it->second;
}

CharacterRegistry& default_characters() {
  static CharacterRegistry registry;
  return registry;
}

long long power_sum_trace(int r, const CycleType& tau) {
  if (r < 1) throw std::invalid_argument("power_sum_trace needs r >= 1");
  long long fixed = 0;
  for (int d = 1; d <= r; ++d) {
    if (r % d == 0) fixed += static_cast<long long>(d) * tau.multiplicity(d);
  }
  return fixed;
}

Rational weyl_trace(const Partition& lambda, const CycleType& tau, CharacterRegistry& registry) {
  if (lambda.empty()) return 1;
  const CharacterTable& table = registry.table(lambda.size());
  const auto& chi = table.row(lambda);
  Rational total = 0;
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    if (chi[c] == 0) continue;
    const CycleType& rho = table.classes()[c];
    BigInt product = 1;
    for (int part : rho.shape().parts()) {
      product *= static_cast<long>(power_sum_trace(part, tau));
      if (product == 0) break;
    }
    total += Rational(BigInt(static_cast<long>(chi[c])) * product, rho.centralizer_order());
  }
  total.canonicalize();
  return total;
}

namespace {

using KostkaMemo = std::map<std::pair<std::vector<int>, std::size_t>, BigInt>;

// Fills the entries 1..count of `content`: the cells holding the largest
// entry form a horizontal strip of size content[count-1].
BigInt kostka_rec(const std::vector<int>& shape, std::span<const int> content, std::size_t count,
                  KostkaMemo& memo) {
  if (count == 0) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, count);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = content[count - 1];
  BigInt total = 0;
  std::vector<int> inner(shape.size());
  // Choose inner[i] in [shape[i+1], shape[i]] with total removal = strip.
  std::function<void(std::size_t, int)> choose = [&](std::size_t i, int left) {
    if (i == shape.size()) {
      if (left != 0) return;
      std::vector<int> reduced;
      for (int v : inner) {
        if (v > 0) reduced.push_back(v);
      }
      total += kostka_rec(reduced, content, count - 1, memo);
      return;
    }
    const int lower = i + 1 < shape.size() ? shape[i + 1] : 0;
    for (int v = shape[i]; v >= lower; --v) {
      const int removed = shape[i] - v;
      if (removed > left) break;
      inner[i] = v;
      choose(i + 1, left - removed);
    }
  };
  choose(0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka(const Partition& lambda, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka content must be nonnegative");
    total += c;
  }
  if (total != lambda.size()) {
    throw std::invalid_argument("kostka: shape and content sizes differ");
  }
  KostkaMemo memo;
  return kostka_rec(lambda.parts(), content, content.size(), memo);
}

std::vector<Partition> pieri_expand(const Partition& eta, int j) {
  if (j < 0) throw std::invalid_argument("pieri_expand needs j >= 0");
  const std::size_t len = static_cast<std::size_t>(eta.length()) + 1;
  std::vector<Partition> out;
  std::vector<int> mu(len);
  // mu_1 >= eta_1 >= mu_2 >= eta_2 >= ... with |mu| - |eta| = j.
  std::function<void(std::size_t, int)> choose = [&](std::size_t i, int left) {
    if (i == len) {
      if (left == 0) out.push_back(Partition::from_unsorted(mu));
      return;
    }
    const int low = eta[i];
    const int high = i == 0 ? eta[0] + left : eta[i - 1];
    for (int v = low; v <= high && v - low <= left; ++v) {
      mu[i] = v;
      choose(i + 1, left - (v - low));
    }
  };
  choose(0, j);
  std::ranges::sort(out);
  return out;
}

}  // namespace stabilab

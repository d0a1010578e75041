#include "stabilab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stabilab {

QSeries qseries_truncate(QSeries a, int bound) {
  a.resize(static_cast<std::size_t>(bound + 1));
  return a;
}

QSeries qseries_multiply(const QSeries& a, const QSeries& b, int bound) {
  QSeries out(static_cast<std::size_t>(bound + 1), 0);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= bound; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= bound; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

QSeries qseries_one_minus_power(int r, long e, int bound) {
  if (r < 1) throw std::invalid_argument("qseries_one_minus_power needs r >= 1");
  QSeries out(static_cast<std::size_t>(bound + 1), 0);
  out[0] = 1;
  const auto step = static_cast<std::size_t>(r);
  if (e >= 0) {
    // Repeated multiplication by (1 - q^r), in place from the top.
    for (long t = 0; t < e; ++t) {
      for (std::size_t i = out.size(); i-- > step;) out[i] -= out[i - step];
    }
  } else {
    // Repeated division by (1 - q^r): running sums with stride r.
    for (long t = 0; t < -e; ++t) {
      for (std::size_t i = step; i < out.size(); ++i) out[i] += out[i - step];
    }
  }
  return out;
}

MultigradedSeries::MultigradedSeries(int k, int bound) : k_(k), bound_(bound) {
  if (k < 1) throw std::invalid_argument("series need k >= 1");
  if (bound < 0) throw std::invalid_argument("series bound must be nonnegative");
}

BigInt MultigradedSeries::coeff(const ExponentVector& exponents) const {
  auto it = coeffs_.find(exponents);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void MultigradedSeries::add(const ExponentVector& exponents, const BigInt& value) {
  if (static_cast<int>(exponents.size()) != k_) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  if (degree(exponents) > bound_ || value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponents, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

MultigradedSeries MultigradedSeries::component(int d) const {
  MultigradedSeries out(k_, bound_);
  for (const auto& [key, value] : coeffs_) {
    if (degree(key) == d) out.coeffs_.emplace(key, value);
  }
  return out;
}

MultigradedSeries MultigradedSeries::truncated(int bound) const {
  MultigradedSeries out(k_, std::min(bound, bound_));
  for (const auto& [key, value] : coeffs_) out.add(key, value);
  return out;
}

QSeries MultigradedSeries::total_degree_coefficients() const {
  QSeries out(static_cast<std::size_t>(bound_ + 1), 0);
  for (const auto& [key, value] : coeffs_) out[static_cast<std::size_t>(degree(key))] += value;
  return out;
}

MultigradedSeries operator+(const MultigradedSeries& a, const MultigradedSeries& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("series with different k");
  MultigradedSeries out(a.k_, std::min(a.bound_, b.bound_));
  for (const auto& [key, value] : a.coeffs_) out.add(key, value);
  for (const auto& [key, value] : b.coeffs_) out.add(key, value);
  return out;
}

MultigradedSeries operator-(const MultigradedSeries& a, const MultigradedSeries& b) {
  return a + b.scaled(-1);
}

MultigradedSeries operator*(const MultigradedSeries& a, const MultigradedSeries& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("series with different k");
  MultigradedSeries out(a.k_, std::min(a.bound_, b.bound_));
  ExponentVector sum(static_cast<std::size_t>(a.k_));
  for (const auto& [ka, va] : a.coeffs_) {
    const int da = degree(ka);
    for (const auto& [kb, vb] : b.coeffs_) {
      if (da + degree(kb) > out.bound_) continue;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ka[i] + kb[i];
      out.add(sum, va * vb);
    }
  }
  return out;
}

MultigradedSeries MultigradedSeries::scaled(const BigInt& factor) const {
  MultigradedSeries out(k_, bound_);
  if (factor == 0) return out;
  for (const auto& [key, value] : coeffs_) out.coeffs_.emplace(key, value * factor);
  return out;
}

nlohmann::json MultigradedSeries::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, value] : coeffs_) {
    out.push_back({{"exponents", key}, {"coeff", value.get_str()}});
  }
  return out;
}

MultigradedSeries MultigradedSeries::from_json(int k, int bound, const nlohmann::json& doc) {
  MultigradedSeries out(k, bound);
  for (const auto& term : doc) {
    out.add(term.at("exponents").get<ExponentVector>(),
            BigInt(term.at("coeff").get<std::string>()));
  }
  return out;
}

namespace {

// Column-strict, row-weak fillings of `shape` by letters drawn from
// `alphabet` (in increasing order, graded by `letter_degree`), counted by
// weight. Letters must be sorted with nondecreasing degree.
MultigradedSeries count_fillings(const Partition& shape, int k, int bound,
                                 const std::vector<ExponentVector>& alphabet) {
  MultigradedSeries out(k, bound);
  if (shape.empty()) {
    out.add(ExponentVector(static_cast<std::size_t>(k), 0), 1);
    return out;
  }
  std::vector<int> letter_degree;
  for (const auto& letter : alphabet) letter_degree.push_back(degree(letter));

  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int row = 0; row < shape.length(); ++row) {
    for (int col = 0; col < shape[static_cast<std::size_t>(row)]; ++col) cells.push_back({row, col});
  }
  // below_first[i]: cells at positions >= i outside the first row. Each of
  // them sits strictly above a smaller letter, so costs at least
  // min_positive degree.
  int min_positive = bound + 1;
  for (int d : letter_degree) {
    if (d > 0) min_positive = std::min(min_positive, d);
  }
  if (min_positive > bound) min_positive = bound + 1;
  std::vector<int> below_first(cells.size() + 1, 0);
  for (std::size_t i = cells.size(); i-- > 0;) {
    below_first[i] = below_first[i + 1] + (cells[i].row > 0 ? 1 : 0);
  }

  std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.length()));
  for (int row = 0; row < shape.length(); ++row) {
    grid[static_cast<std::size_t>(row)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(row)]), -1);
  }
  std::map<ExponentVector, long long> counts;
  ExponentVector weight(static_cast<std::size_t>(k), 0);

  std::function<void(std::size_t, int)> place = [&](std::size_t i, int used) {
    if (i == cells.size()) {
      ++counts[weight];
      return;
    }
    const auto [row, col] = cells[i];
    int start = 0;
    if (col > 0) start = grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)];
    if (row > 0) {
      start = std::max(start, grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    }
    // Cells after this one outside the first row need positive degree.
    const long long reserve =
        static_cast<long long>(below_first[i + 1]) * (min_positive > bound ? 0 : min_positive);
    for (std::size_t letter = static_cast<std::size_t>(start); letter < alphabet.size(); ++letter) {
      const int d = letter_degree[letter];
      if (used + d + reserve > bound) break;
      grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = static_cast<int>(letter);
      for (std::size_t v = 0; v < weight.size(); ++v) weight[v] += alphabet[letter][v];
      place(i + 1, used + d);
      for (std::size_t v = 0; v < weight.size(); ++v) weight[v] -= alphabet[letter][v];
    }
    grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = -1;
  };
  place(0, 0);
  for (const auto& [key, count] : counts) out.add(key, BigInt(static_cast<long>(count)));
  return out;
}

std::vector<ExponentVector> monomials_in_order(int k, int bound, FillingOrder order) {
  std::vector<ExponentVector> out;
  for (int d = 0; d <= bound; ++d) {
    auto layer = enumerate_exponent_vectors(k, d);
    if (order == FillingOrder::graded_lex) {
      std::ranges::sort(layer);
    } else {
      std::ranges::sort(layer, [](const ExponentVector& a, const ExponentVector& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
      });
      std::ranges::reverse(layer);
    }
    for (auto& v : layer) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

MultigradedSeries schur_poly(const Partition& lambda, int k, std::optional<int> bound) {
  const int b = bound.value_or(lambda.size());
  if (k < 1) throw std::invalid_argument("schur_poly needs k >= 1");
  if (lambda.length() > k || lambda.size() > b) return MultigradedSeries(k, b);
  std::vector<ExponentVector> letters;
  for (int i = 0; i < k; ++i) {
    ExponentVector e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(i)] = 1;
    letters.push_back(std::move(e));
  }
  return count_fillings(lambda, k, b, letters);
}

MultigradedSeries plethysm_series(const Partition& mu, int k, int bound, FillingOrder order) {
  if (bound < 0) throw std::invalid_argument("plethysm_series needs bound >= 0");
  return count_fillings(mu, k, bound, monomials_in_order(k, bound, order));
}

QSeries product_series(int k, int bound) {
  if (k < 1) throw std::invalid_argument("product_series needs k >= 1");
  if (bound < 0) throw std::invalid_argument("product_series needs bound >= 0");
  QSeries out(static_cast<std::size_t>(bound + 1), 0);
  out[0] = 1;
  for (int r = 1; r <= bound; ++r) {
    const long e = binomial(r + k - 1, k - 1).get_si();
    out = qseries_multiply(out, qseries_one_minus_power(r, -e, bound), bound);
  }
  return out;
}

std::map<Partition, BigInt> schur_expand(const MultigradedSeries& f) {
  std::map<Partition, BigInt> out;
  if (f.is_zero()) return out;
  const int d = degree(f.coefficients().begin()->first);
  for (const auto& [key, value] : f.coefficients()) {
    if (degree(key) != d) throw std::invalid_argument("schur_expand needs a homogeneous input");
    // Adjacent transpositions generate S_k.
    for (std::size_t i = 0; i + 1 < key.size(); ++i) {
      ExponentVector swapped = key;
      std::swap(swapped[i], swapped[i + 1]);
      if (f.coeff(swapped) != value) throw std::invalid_argument("schur_expand input is not symmetric");
    }
  }
  MultigradedSeries residue = f.truncated(d);
  const std::size_t max_steps = enumerate_partitions(d, f.k()).size();
  for (std::size_t step = 0; !residue.is_zero(); ++step) {
    if (step >= max_steps) throw ConsistencyError("schur_expand left a nonzero residue");
    // The lexicographically largest exponent is the leading term of the
    // next Schur polynomial.
    const auto& [lead, c] = *residue.coefficients().rbegin();
    const Partition lambda = Partition::from_unsorted(lead);
    const BigInt coefficient = c;
    out[lambda] += coefficient;
    residue = residue - schur_poly(lambda, f.k(), d).scaled(coefficient);
  }
  std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
  return out;
}

}  // namespace stabilab

#include "stabilab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stabilab {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  BigInt content = 0;
  for (const auto& [col, value] : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), value.get_mpz_t());
    if (content == 1) break;
  }
  if (row.front().second < 0) content = -content;
  if (content != 1) {
    for (auto& [col, value] : row) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), content.get_mpz_t());
  }
}

BigInt entry_at(const SparseRow& row, int col) {
  auto it = std::ranges::lower_bound(row, col, {}, &std::pair<int, BigInt>::first);
  if (it == row.end() || it->first != col) return 0;
  return it->second;
}

// target := pivot_value * target - target_value * pivot, made primitive.
void eliminate(SparseRow& target, const SparseRow& pivot, int col) {
  const BigInt target_value = entry_at(target, col);
  if (target_value == 0) return;
  const BigInt pivot_value = entry_at(pivot, col);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), target_value.get_mpz_t(), pivot_value.get_mpz_t());
  const BigInt a = pivot_value / g;
  const BigInt b = target_value / g;

  SparseRow out;
  out.reserve(target.size() + pivot.size());
  auto t = target.begin();
  auto p = pivot.begin();
  while (t != target.end() || p != pivot.end()) {
    if (p == pivot.end() || (t != target.end() && t->first < p->first)) {
      out.emplace_back(t->first, a * t->second);
      ++t;
    } else if (t == target.end() || p->first < t->first) {
      out.emplace_back(p->first, -b * p->second);
      ++p;
    } else {
      BigInt v = a * t->second - b * p->second;
      if (v != 0) out.emplace_back(t->first, std::move(v));
      ++t;
      ++p;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

}  // namespace

SparseRow primitive_row(const RationalRow& row) {
  BigInt lcm = 1;
  for (const auto& [col, value] : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.get_den().get_mpz_t());
  }
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [col, value] : row) {
    if (value == 0) continue;
    out.emplace_back(col, value.get_num() * (lcm / value.get_den()));
  }
  std::ranges::sort(out, {}, &std::pair<int, BigInt>::first);
  make_primitive(out);
  return out;
}

bool EchelonForm::insert(SparseRow row) {
  make_primitive(row);
  while (!row.empty()) {
    auto it = pivot_row_.find(row.front().first);
    if (it == pivot_row_.end()) break;
    eliminate(row, rows_[it->second], row.front().first);
  }
  if (row.empty()) return false;
  pivot_row_.emplace(row.front().first, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

void EchelonForm::reduce_fully() {
  // Largest pivot first: later rows are already clean at larger pivots.
  for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
    const auto [col, index] = *it;
    for (std::size_t other = 0; other < rows_.size(); ++other) {
      if (other == index) continue;
      if (rows_[other].front().first >= col) continue;
      eliminate(rows_[other], rows_[index], col);
    }
  }
}

EchelonForm::Nullspace EchelonForm::nullspace(int num_columns) {
  reduce_fully();
  Nullspace out;
  for (int col = 0; col < num_columns; ++col) {
    if (!pivot_row_.contains(col)) out.free_columns.push_back(col);
  }
  const std::set<int> free_set(out.free_columns.begin(), out.free_columns.end());
  // Column f of the nullspace basis vector: x_f = 1 and
  // x_pivot(r) = -R[r][f] / R[r][pivot(r)].
  std::map<int, RationalRow> by_free;
  for (int f : out.free_columns) by_free[f].emplace_back(f, Rational(1));
  for (const auto& row : rows_) {
    const int pivot = row.front().first;
    const BigInt& lead = row.front().second;
    for (std::size_t i = 1; i < row.size(); ++i) {
      const auto& [col, value] = row[i];
      if (!free_set.contains(col)) continue;
      Rational x(-value, lead);
      x.canonicalize();
      by_free[col].emplace_back(pivot, std::move(x));
    }
  }
  for (int f : out.free_columns) {
    RationalRow v = std::move(by_free[f]);
    std::ranges::sort(v, {}, &std::pair<int, Rational>::first);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace stabilab

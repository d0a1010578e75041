// Brute-force reference computations for the test suites. Nothing here calls
// into the library; everything is small-case enumeration.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Number of partitions of n with every part <= max_part.
inline long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

inline long count_partitions(int n) { return count_partitions(n, n); }

// All partitions of n, each as a weakly decreasing vector.
inline std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(left - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Semistandard tableaux of `shape` with the given content, by filling the
// cells row by row with every admissible value.
inline long count_ssyt(const std::vector<int>& shape, const std::vector<int>& content) {
  int cells = std::accumulate(shape.begin(), shape.end(), 0);
  if (cells != std::accumulate(content.begin(), content.end(), 0)) return 0;
  std::vector<std::vector<int>> t(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(static_cast<std::size_t>(shape[r]), 0);
  std::vector<int> left = content;
  long count = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == shape.size()) {
      ++count;
      return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
      rec(r + 1, 0);
      return;
    }
    for (std::size_t v = 0; v < left.size(); ++v) {
      if (left[v] == 0) continue;
      if (c > 0 && t[r][c - 1] > static_cast<int>(v)) continue;
      if (r > 0 && t[r - 1][c] >= static_cast<int>(v)) continue;
      t[r][c] = static_cast<int>(v);
      --left[v];
      rec(r, c + 1);
      ++left[v];
    }
  };
  rec(0, 0);
  return count;
}

// Semistandard tableaux of `shape` with entries in 1..n.
inline long count_ssyt_entries(const std::vector<int>& shape, int n) {
  int cells = std::accumulate(shape.begin(), shape.end(), 0);
  long total = 0;
  std::vector<int> content(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left == 0) total += count_ssyt(shape, content);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      content[static_cast<std::size_t>(i)] = c;
      rec(i + 1, left - c);
    }
    content[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, cells);
  return total;
}

// Every permutation of 0..n-1.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Cycle lengths of a permutation, sorted decreasing.
inline std::vector<int> cycle_type(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Permutation with the given cycle type (consecutive cycles).
inline std::vector<int> permutation_of_type(const std::vector<int>& type) {
  std::vector<int> sigma;
  int start = 0;
  for (int len : type) {
    for (int i = 0; i < len; ++i) sigma.push_back(start + (i + 1) % len);
    start += len;
  }
  return sigma;
}

// Character of the permutation module on tabloids of shape mu at sigma:
// the number of row assignments with the right row sizes that sigma preserves.
inline long tabloid_fixed_points(const std::vector<int>& mu, const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  const int rows = static_cast<int>(mu.size());
  std::vector<int> row(static_cast<std::size_t>(n), 0);
  long count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<int> sizes(static_cast<std::size_t>(rows), 0);
      for (int x = 0; x < n; ++x) ++sizes[static_cast<std::size_t>(row[static_cast<std::size_t>(x)])];
      if (sizes != mu) return;
      for (int x = 0; x < n; ++x) {
        if (row[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x)])] != row[static_cast<std::size_t>(x)]) return;
      }
      ++count;
      return;
    }
    for (int r = 0; r < rows; ++r) {
      row[static_cast<std::size_t>(i)] = r;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

// Full character table of S_n from Young's rule: the tabloid characters
// equal sum_lambda K_{lambda mu} chi^lambda, with K unitriangular in the
// dominance-compatible (reverse lexicographic) order. Keys are (lambda, type).
inline std::map<std::pair<std::vector<int>, std::vector<int>>, long> character_table(int n) {
  const auto parts = partitions_of(n);  // decreasing lexicographic order
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> chi;
  for (const auto& type : parts) {
    const auto sigma = permutation_of_type(type);
    // Solve from the largest partition: pi^mu = chi^mu + sum_{lambda > mu} K chi^lambda.
    for (const auto& mu : parts) {
      long value = tabloid_fixed_points(mu, sigma);
      for (const auto& lambda : parts) {
        if (lambda == mu) break;
        value -= count_ssyt(lambda, mu) * chi[{lambda, type}];
      }
      chi[{mu, type}] = value;
    }
  }
  return chi;
}

// Monomials of degree d in `vars` variables.
inline std::vector<std::vector<int>> monomials(int vars, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int c = left; c >= 0; --c) {
      e[static_cast<std::size_t>(i)] = c;
      rec(i + 1, left - c);
    }
  };
  if (vars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

// Monomials of degree d in n variables fixed by sigma (the trace of sigma on
// the degree-d symmetric power).
inline long fixed_monomials(const std::vector<int>& sigma, int d) {
  const int n = static_cast<int>(sigma.size());
  long count = 0;
  for (const auto& m : monomials(n, d)) {
    bool fixed = true;
    for (int i = 0; i < n && fixed; ++i) fixed = m[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] == m[static_cast<std::size_t>(i)];
    if (fixed) ++count;
  }
  return count;
}

// Sign of sigma restricted to an invariant subset, times whether the subset
// is invariant: the trace of sigma on the d-th exterior power, summed.
inline long exterior_trace(const std::vector<int>& sigma, int d) {
  const int n = static_cast<int>(sigma.size());
  long total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    bool invariant = true;
    for (int i = 0; i < n && invariant; ++i) {
      if ((mask >> i) & 1u) invariant = (mask >> sigma[static_cast<std::size_t>(i)]) & 1u;
    }
    if (!invariant) continue;
    // Sign: (-1)^(number of inversions of sigma on the subset in order).
    std::vector<int> elems;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) elems.push_back(i);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = a + 1; b < elems.size(); ++b) {
        if (sigma[static_cast<std::size_t>(elems[a])] > sigma[static_cast<std::size_t>(elems[b])]) ++inversions;
      }
    }
    total += inversions % 2 == 0 ? 1 : -1;
  }
  return total;
}

// S_n orbits on monomials of degree d in k sets of n variables, by Burnside
// over every permutation. Variable (set i, index j) is j*k + i.
inline long orbit_count(int n, int k, int d) {
  const auto perms = permutations(n);
  const auto monos = monomials(k * n, d);
  long total = 0;
  for (const auto& sigma : perms) {
    for (const auto& m : monos) {
      bool fixed = true;
      for (int j = 0; j < n && fixed; ++j) {
        for (int i = 0; i < k && fixed; ++i) {
          fixed = m[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)] * k + i)] == m[static_cast<std::size_t>(j * k + i)];
        }
      }
      if (fixed) ++total;
    }
  }
  return total / static_cast<long>(perms.size());
}

// Multiplicity of the irreducible chi^mu in the multidegree-L part of the
// ring on L.size() sets of n variables, by the character inner product over
// every permutation.
inline long multigraded_multiplicity(const std::vector<int>& mu, const std::vector<int>& L) {
  const int n = std::accumulate(mu.begin(), mu.end(), 0);
  const auto chi = character_table(n);
  const auto perms = permutations(n);
  long total = 0;
  for (const auto& sigma : perms) {
    long trace = 1;
    for (int l : L) trace *= fixed_monomials(sigma, l);
    total += chi.at({mu, cycle_type(sigma)}) * trace;
  }
  return total / static_cast<long>(perms.size());
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Dimension of the degree-d part of the ideal generated by the polarized power
// sums p_a, 0 < |a| <= n, in k sets of n variables (variable (i, j) at j*k+i),
// by dense elimination over all monomial multiples.
inline std::size_t ideal_dim(int k, int n, int d) {
  const auto cols = monomials(k * n, d);
  std::map<std::vector<int>, std::size_t> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
  std::vector<std::vector<mpq_class>> rows;
  for (int e = 1; e <= std::min(n, d); ++e) {
    for (const auto& a : monomials(k, e)) {
      for (const auto& shift : monomials(k * n, d - e)) {
        std::vector<mpq_class> row(cols.size(), 0);
        for (int j = 0; j < n; ++j) {
          std::vector<int> prod = shift;
          for (int i = 0; i < k; ++i) prod[static_cast<std::size_t>(j * k + i)] += a[static_cast<std::size_t>(i)];
          row[col_of.at(prod)] += 1;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return dense_rank(std::move(rows));
}

// Coefficients of [n]_q! = prod_{i<=n} (1 + q + ... + q^{i-1}).
inline std::vector<long> q_factorial(int n) {
  std::vector<long> out{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next(out.size() + static_cast<std::size_t>(i - 1), 0);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (int b = 0; b < i; ++b) next[a + static_cast<std::size_t>(b)] += out[a];
    }
    out = next;
  }
  return out;
}

}  // namespace oracle

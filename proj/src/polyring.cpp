#include "stabilab/polyring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "stabilab/characters.hpp"
#include "stabilab/linalg.hpp"
#include "stabilab/multiplicities.hpp"
#include "stabilab/symfunc.hpp"

namespace stabilab {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

MultiPoly::MultiPoly(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n < 1) throw std::invalid_argument("polynomial ring needs k, n >= 1");
}

MultiPoly MultiPoly::constant(int k, int n, const Rational& c) {
  MultiPoly out(k, n);
  out.add_term(Monomial(static_cast<std::size_t>(k * n), 0), c);
  return out;
}

MultiPoly MultiPoly::variable(int k, int n, int set, int index) {
  if (set < 0 || set >= k || index < 0 || index >= n) {
    throw std::invalid_argument("variable index out of range");
  }
  Monomial m(static_cast<std::size_t>(k * n), 0);
  m[static_cast<std::size_t>(var_index(k, set, index))] = 1;
  return monomial(k, n, std::move(m));
}

MultiPoly MultiPoly::monomial(int k, int n, Monomial exponents, const Rational& c) {
  MultiPoly out(k, n);
  out.add_term(exponents, c);
  return out;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != num_vars()) {
    throw std::invalid_argument("monomial has wrong number of variables");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, stabilab::total_degree(m));
  return best;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = stabilab::total_degree(terms_.begin()->first);
  return std::ranges::all_of(terms_, [d](const auto& t) { return stabilab::total_degree(t.first) == d; });
}

std::vector<int> MultiPoly::multidegree(const Monomial& m) const {
  std::vector<int> out(static_cast<std::size_t>(k_), 0);
  for (std::size_t v = 0; v < m.size(); ++v) out[v % static_cast<std::size_t>(k_)] += m[v];
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(k_, n_);
  if (c == 0) return out;
  for (const auto& [m, value] : terms_) out.terms_.emplace(m, value * c);
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(k_, n_);
  for (const auto& [m, value] : terms_) {
    const int e = m[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial lowered = m;
    --lowered[static_cast<std::size_t>(var)];
    out.add_term(lowered, value * e);
  }
  return out;
}

MultiPoly MultiPoly::apply_differential(const MultiPoly& op) const {
  check_compatible(op);
  MultiPoly out(k_, n_);
  Monomial lowered(static_cast<std::size_t>(num_vars()));
  for (const auto& [e, c_op] : op.terms_) {
    for (const auto& [g, c_f] : terms_) {
      BigInt falling = 1;
      bool divides = true;
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (g[v] < e[v]) {
          divides = false;
          break;
        }
        for (int t = 0; t < e[v]; ++t) falling *= g[v] - t;
        lowered[v] = g[v] - e[v];
      }
      if (!divides) continue;
      out.add_term(lowered, c_op * c_f * Rational(falling));
    }
  }
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (k_ != other.k_ || n_ != other.n_) throw std::invalid_argument("polynomials from different rings");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + b.scaled(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.k_, a.n_);
  Monomial sum(static_cast<std::size_t>(a.num_vars()));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = ma[v] + mb[v];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    out.push_back({{"exps", m}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return out;
}

MultiPoly MultiPoly::from_json(int k, int n, const nlohmann::json& doc) {
  MultiPoly out(k, n);
  for (const auto& term : doc) {
    Rational c(BigInt(term.at("num").get<std::string>()), BigInt(term.at("den").get<std::string>()));
    c.canonicalize();
    out.add_term(term.at("exps").get<Monomial>(), c);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
  auto vectors = enumerate_exponent_vectors(num_vars, d);
  std::ranges::sort(vectors);
  return vectors;
}

MultiPoly polarized_power_sum(const ExponentVector& a, int n) {
  const int k = static_cast<int>(a.size());
  if (k < 1) throw std::invalid_argument("polarized power sum needs k >= 1");
  if (degree(a) == 0) return MultiPoly::constant(k, n, 1);
  MultiPoly out(k, n);
  for (int j = 0; j < n; ++j) {
    Monomial m(static_cast<std::size_t>(k * n), 0);
    for (int i = 0; i < k; ++i) {
      m[static_cast<std::size_t>(MultiPoly::var_index(k, i, j))] = a[static_cast<std::size_t>(i)];
    }
    out.add_term(m, 1);
  }
  return out;
}

namespace {

void check_permutation(std::span<const int> sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation has wrong size");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Monomial image under sigma: exponent of (i, sigma(j)) := exponent of (i, j).
Monomial permute_monomial(std::span<const int> sigma, int k, const Monomial& m) {
  Monomial out(m.size());
  const int n = static_cast<int>(sigma.size());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < k; ++i) {
      out[static_cast<std::size_t>(MultiPoly::var_index(k, i, sigma[static_cast<std::size_t>(j)]))] =
          m[static_cast<std::size_t>(MultiPoly::var_index(k, i, j))];
    }
  }
  return out;
}

}  // namespace

MultiPoly act(std::span<const int> sigma, const MultiPoly& f) {
  check_permutation(sigma, f.n());
  MultiPoly out(f.k(), f.n());
  for (const auto& [m, c] : f.terms()) out.add_term(permute_monomial(sigma, f.k(), m), c);
  return out;
}

namespace {

// Weyl generators, by degree then lexicographically decreasing.
std::vector<ExponentVector> weyl_generators(int k, int n, int max_degree) {
  std::vector<ExponentVector> out;
  for (int d = 1; d <= std::min(n, max_degree); ++d) {
    for (auto& a : enumerate_exponent_vectors(k, d)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

std::vector<std::vector<ExponentVector>> generator_multisets(int k, int n, int d) {
  std::vector<std::vector<ExponentVector>> out;
  if (d < 0) return out;
  const auto gens = weyl_generators(k, n, d);
  std::vector<ExponentVector> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      const int deg = degree(gens[i]);
      if (deg > left) continue;
      chosen.push_back(gens[i]);
      rec(i, left - deg);
      chosen.pop_back();
    }
  };
  rec(0, d);
  return out;
}

std::vector<GeneratorProduct> generator_products_of_degree(int k, int n, int d) {
  std::map<ExponentVector, MultiPoly> power_sums;
  std::vector<GeneratorProduct> out;
  for (auto& factors : generator_multisets(k, n, d)) {
    MultiPoly product = MultiPoly::constant(k, n, 1);
    for (const auto& a : factors) {
      auto it = power_sums.find(a);
      if (it == power_sums.end()) it = power_sums.emplace(a, polarized_power_sum(a, n)).first;
      product = product * it->second;
    }
    out.push_back({std::move(factors), d, std::move(product)});
  }
  return out;
}

std::vector<GeneratorProduct> generator_products(int k, int n, int d_max) {
  std::vector<GeneratorProduct> out;
  for (int d = 0; d <= d_max; ++d) {
    for (auto& p : generator_products_of_degree(k, n, d)) out.push_back(std::move(p));
  }
  return out;
}

std::size_t rank_of(std::span<const MultiPoly> polys) {
  std::map<Monomial, int> column;
  EchelonForm echelon;
  for (const auto& f : polys) {
    RationalRow row;
    for (const auto& [m, c] : f.terms()) {
      auto it = column.try_emplace(m, static_cast<int>(column.size())).first;
      row.emplace_back(it->second, c);
    }
    echelon.insert(row);
  }
  return echelon.rank();
}

namespace {

// Column vectors (one per index j) of a monomial, in index order.
bool is_canonical(const Monomial& m, int k, int n) {
  for (int j = 1; j < n; ++j) {
    const auto prev = m.begin() + (j - 1) * k;
    const auto cur = m.begin() + j * k;
    if (std::lexicographical_compare(cur, cur + k, prev, prev + k)) return false;
  }
  return true;
}

Monomial canonical_monomial(const Profile& profile) {
  Monomial m;
  for (const auto& v : profile.vectors()) m.insert(m.end(), v.begin(), v.end());
  return m;
}

class ProfileIndex {
 public:
  ProfileIndex(int k, int n, int d) : k_(k), n_(n) {
    const auto profiles = enumerate_profiles(n, k, d);
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      index_.emplace(canonical_monomial(profiles[i]), static_cast<int>(i));
    }
  }
  std::size_t size() const { return index_.size(); }

  RationalRow coordinates(const MultiPoly& f) const {
    RationalRow row;
    for (const auto& [m, c] : f.terms()) {
      if (!is_canonical(m, k_, n_)) continue;
      auto it = index_.find(m);
      if (it == index_.end()) throw std::invalid_argument("polynomial has the wrong degree");
      row.emplace_back(it->second, c);
    }
    std::ranges::sort(row, {}, &std::pair<int, Rational>::first);
    return row;
  }

 private:
  int k_;
  int n_;
  std::map<Monomial, int> index_;
};

struct DegreeStats {
  std::size_t products = 0;
  std::size_t profiles = 0;
  std::size_t rank = 0;
};

DegreeStats degree_stats(int k, int n, int d) {
  const ProfileIndex index(k, n, d);
  EchelonForm echelon;
  DegreeStats stats;
  stats.profiles = index.size();
  for (const auto& product : generator_products_of_degree(k, n, d)) {
    ++stats.products;
    echelon.insert(index.coordinates(product.product));
  }
  stats.rank = echelon.rank();
  return stats;
}

}  // namespace

std::vector<Rational> invariant_coordinates(const MultiPoly& f, int d) {
  const ProfileIndex index(f.k(), f.n(), d);
  std::vector<Rational> out(index.size(), 0);
  for (auto& [col, value] : index.coordinates(f)) out[static_cast<std::size_t>(col)] = value;
  return out;
}

Rational GradedBasis::trace(std::span<const int> sigma) const {
  Rational total = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const MultiPoly& h = elements[i];
    // (sigma h)[lead] = h[M] where M(i, j) = lead(i, sigma(j)).
    const Monomial& lead = leads[i];
    const int k = h.k();
    Monomial source(lead.size());
    for (int j = 0; j < h.n(); ++j) {
      for (int s = 0; s < k; ++s) {
        source[static_cast<std::size_t>(MultiPoly::var_index(k, s, j))] =
            lead[static_cast<std::size_t>(MultiPoly::var_index(k, s, sigma[static_cast<std::size_t>(j)]))];
      }
    }
    total += h.coeff(source);
  }
  return total;
}

GradedBasis harmonics_basis(int k, int n, int d) {
  if (k < 1 || n < 1) throw std::invalid_argument("harmonics_basis needs k, n >= 1");
  GradedBasis basis;
  basis.degree = d;
  if (d < 0) return basis;
  const int vars = k * n;
  if (binomial(vars + d - 1, d) > static_cast<unsigned long>(kMaxMonomialsPerDegree)) {
    throw ResourceError("degree " + std::to_string(d) + " of the ring on " + std::to_string(vars) +
                        " variables exceeds the monomial cap");
  }
  const auto columns = monomials_of_degree(vars, d);
  const auto gens = weyl_generators(k, n, d);

  // Row per (generator, output monomial); entries filled column by column so
  // every row stays sorted.
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  std::vector<SparseRow> rows;
  Monomial lowered(static_cast<std::size_t>(vars));
  for (std::size_t col = 0; col < columns.size(); ++col) {
    const Monomial& g = columns[col];
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (int j = 0; j < n; ++j) {
        BigInt falling = 1;
        bool divides = true;
        lowered = g;
        for (int i = 0; i < k && divides; ++i) {
          const auto v = static_cast<std::size_t>(MultiPoly::var_index(k, i, j));
          const int e = gens[a][static_cast<std::size_t>(i)];
          if (g[v] < e) {
            divides = false;
            break;
          }
          for (int t = 0; t < e; ++t) falling *= g[v] - t;
          lowered[v] = g[v] - e;
        }
        if (!divides) continue;
        auto [it, inserted] = row_of.try_emplace({a, lowered}, rows.size());
        if (inserted) rows.emplace_back();
        SparseRow& row = rows[it->second];
        if (!row.empty() && row.back().first == static_cast<int>(col)) {
          row.back().second += falling;
        } else {
          row.emplace_back(static_cast<int>(col), falling);
        }
      }
    }
  }
  EchelonForm echelon;
  for (auto& row : rows) {
    std::erase_if(row, [](const auto& entry) { return entry.second == 0; });
    if (!row.empty()) echelon.insert(std::move(row));
  }
  auto kernel = echelon.nullspace(static_cast<int>(columns.size()));
  for (std::size_t i = 0; i < kernel.vectors.size(); ++i) {
    MultiPoly h(k, n);
    for (const auto& [col, value] : kernel.vectors[i]) h.add_term(columns[static_cast<std::size_t>(col)], value);
    basis.elements.push_back(std::move(h));
    basis.leads.push_back(columns[static_cast<std::size_t>(kernel.free_columns[i])]);
  }
  return basis;
}

StabilityReport verify_theorem1(int k, int n) {
  return timed_report("theorem1-basis", {{"k", k}, {"n", n}}, [&](StabilityReport& report) {
    std::size_t total_rank = 0;
    std::size_t total_profiles = 0;
    for (int d = 0; d <= n + 1; ++d) {
      const DegreeStats stats = degree_stats(k, n, d);
      report.add({{"k", k}, {"n", n}, {"d", d}, {"check", "count"}},
                 static_cast<unsigned long>(stats.products), static_cast<unsigned long>(stats.profiles));
      report.add({{"k", k}, {"n", n}, {"d", d}, {"check", "rank"}},
                 static_cast<unsigned long>(stats.rank), static_cast<unsigned long>(stats.profiles));
      total_rank += stats.rank;
      total_profiles += stats.profiles;
    }
    report.add({{"k", k}, {"n", n}, {"check", "rank-through-n+1"}},
               static_cast<unsigned long>(total_rank), static_cast<unsigned long>(total_profiles));
  });
}

std::optional<int> first_relation_degree(int k, int n, int d_cap) {
  for (int d = 0; d <= d_cap; ++d) {
    const DegreeStats stats = degree_stats(k, n, d);
    // The generators span the invariants in every degree.
    if (stats.rank != stats.profiles) {
      throw ConsistencyError("generator products do not span the degree-" + std::to_string(d) +
                             " invariants");
    }
    if (stats.products > stats.profiles) return d;
  }
  return std::nullopt;
}

namespace {

std::vector<GradedBasis> harmonics_through(int k, int n, int m) {
  // The top degree is the largest; fail on it before any work.
  if (m > 0 && binomial(k * n + m - 1, m) > static_cast<unsigned long>(kMaxMonomialsPerDegree)) {
    throw ResourceError("degree " + std::to_string(m) + " of the ring on " + std::to_string(k * n) +
                        " variables exceeds the monomial cap");
  }
  std::vector<GradedBasis> out;
  for (int d = 0; d <= m; ++d) out.push_back(harmonics_basis(k, n, d));
  return out;
}

}  // namespace

StabilityReport quasifree_check(int k, int n, int m) {
  if (m > n) throw std::invalid_argument("quasifree_check needs m <= n");
  return timed_report("conjecture1-quasifree", {{"k", k}, {"n", n}, {"m", m}}, [&](StabilityReport& report) {
    const auto harmonics = harmonics_through(k, n, m);
    std::map<Monomial, int> column;
    EchelonForm echelon;
    std::size_t domain = 0;
    for (int e = 0; e <= m; ++e) {
      const GradedBasis& h = harmonics[static_cast<std::size_t>(m - e)];
      if (h.dim() == 0) continue;
      for (const auto& product : generator_products_of_degree(k, n, e)) {
        for (const auto& element : h.elements) {
          ++domain;
          RationalRow row;
          const MultiPoly image = element * product.product;
          for (const auto& [mono, c] : image.terms()) {
            auto it = column.try_emplace(mono, static_cast<int>(column.size())).first;
            row.emplace_back(it->second, c);
          }
          echelon.insert(row);
        }
      }
    }
    const auto rank = static_cast<unsigned long>(echelon.rank());
    const auto domain_dim = static_cast<unsigned long>(domain);
    nlohmann::json detail{{"deficiency", domain_dim - rank},
                          {"dim_R_m", binomial(k * n + m - 1, m).get_str()}};
    report.add({{"k", k}, {"n", n}, {"m", m}}, rank, domain_dim, rank == domain_dim, std::move(detail));
  });
}

StabilityReport verify_quasifree_corollaries(int k, int n, int m,
                                             const std::optional<Partition>& lambda) {
  if (m > n) throw std::invalid_argument("quasifree corollaries need m <= n");
  if (lambda && lambda->size() != n) throw std::invalid_argument("lambda must partition n");
  nlohmann::json grid{{"k", k}, {"n", n}, {"m", m}};
  if (lambda) grid["lambda"] = lambda->parts();
  const std::string statement = lambda ? "conjecture1-isotypic" : "conjecture1-hilbert";
  return timed_report(statement, grid, [&](StabilityReport& report) {
    const auto harmonics = harmonics_through(k, n, m);

    // prod_{r=1}^{m} (1 - q^r)^{C(r+k-1, k-1)}
    QSeries factor(static_cast<std::size_t>(m + 1), 0);
    factor[0] = 1;
    for (int r = 1; r <= m; ++r) {
      factor = qseries_multiply(factor, qseries_one_minus_power(r, binomial(r + k - 1, k - 1).get_si(), m), m);
    }

    QSeries lhs(static_cast<std::size_t>(m + 1), 0);
    QSeries ring_series;
    if (lambda) {
      const CharacterTable& table = default_characters().table(n);
      const auto& chi = table.row(*lambda);
      for (int r = 0; r <= m; ++r) {
        Rational total = 0;
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
          if (chi[c] == 0) continue;
          const CycleType& tau = table.classes()[c];
          const auto sigma = tau.representative();
          total += Rational(static_cast<long>(chi[c])) * harmonics[static_cast<std::size_t>(r)].trace(sigma) /
                   Rational(tau.centralizer_order());
        }
        total.canonicalize();
        lhs[static_cast<std::size_t>(r)] = require_integer(total, "harmonic isotypic multiplicity");
      }
      ring_series = isotypic_series(*lambda, k, m);
    } else {
      for (int r = 0; r <= m; ++r) {
        lhs[static_cast<std::size_t>(r)] = static_cast<unsigned long>(harmonics[static_cast<std::size_t>(r)].dim());
      }
      ring_series = qseries_one_minus_power(1, -static_cast<long>(k) * n, m);
    }
    const QSeries rhs = qseries_multiply(factor, ring_series, m);
    for (int r = 0; r <= m; ++r) {
      nlohmann::json params{{"k", k}, {"n", n}, {"m", m}, {"r", r}};
      if (lambda) params["lambda"] = lambda->parts();
      report.add(std::move(params), lhs[static_cast<std::size_t>(r)], rhs[static_cast<std::size_t>(r)]);
    }
  });
}

}  // namespace stabilab

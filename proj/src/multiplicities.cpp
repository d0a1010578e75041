#include "stabilab/multiplicities.hpp"

#include <stdexcept>

namespace stabilab {

QSeries cycle_trace_series(const CycleType& tau, int copies, int bound) {
  QSeries out(static_cast<std::size_t>(bound + 1), 0);
  out[0] = 1;
  for (int len : tau.shape().parts()) {
    out = qseries_multiply(out, qseries_one_minus_power(len, -copies, bound), bound);
  }
  return out;
}

BigInt invariant_dim(int n, int k, int d, InvariantMethod method) {
  if (n < 1 || k < 1) throw std::invalid_argument("invariant_dim needs n, k >= 1");
  if (d < 0) return 0;
  if (method == InvariantMethod::enumeration) {
    return static_cast<unsigned long>(enumerate_profiles(n, k, d).size());
  }
  Rational total = 0;
  for (const auto& tau : cycle_types(n)) {
    const QSeries trace = cycle_trace_series(tau, k, d);
    total += Rational(trace[static_cast<std::size_t>(d)], tau.centralizer_order());
  }
  total.canonicalize();
  return require_integer(total, "Molien invariant count");
}

BigInt weyl_invariant_dim(const Partition& lambda, int n, CharacterRegistry& registry) {
  if (n < 1) throw std::invalid_argument("weyl_invariant_dim needs n >= 1");
  Rational total = 0;
  for (const auto& tau : cycle_types(n)) {
    total += weyl_trace(lambda, tau, registry) / Rational(tau.centralizer_order());
  }
  total.canonicalize();
  return require_integer(total, "Weyl invariant dimension");
}

BigInt g_coeff(const Partition& lambda, const Partition& mu, CharacterRegistry& registry) {
  const int n = mu.size();
  if (n < 1) throw std::invalid_argument("g_coeff needs |mu| >= 1");
  const CharacterTable& table = registry.table(n);
  const auto& chi = table.row(mu);
  Rational total = 0;
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    if (chi[c] == 0) continue;
    const CycleType& tau = table.classes()[c];
    total += Rational(static_cast<long>(chi[c])) * weyl_trace(lambda, tau, registry) /
             Rational(tau.centralizer_order());
  }
  total.canonicalize();
  return require_integer(total, "g coefficient");
}

std::map<Partition, BigInt> g_via_plethysm(const Partition& mu, int k, int bound) {
  const MultigradedSeries series = plethysm_series(mu, k, bound);
  std::map<Partition, BigInt> out;
  for (int d = 0; d <= bound; ++d) {
    for (auto& [lambda, c] : schur_expand(series.component(d))) {
      if (c < 0) throw ConsistencyError("negative multiplicity in plethysm expansion");
      out.emplace(lambda, c);
    }
  }
  return out;
}

BigInt m_mu_L(const Partition& mu, const ExponentVector& L, CharacterRegistry& registry) {
  const int n = mu.size();
  if (n < 1) throw std::invalid_argument("m_mu_L needs |mu| >= 1");
  if (L.empty()) throw std::invalid_argument("m_mu_L needs at least one variable set");
  int top = 0;
  for (int l : L) {
    if (l < 0) throw std::invalid_argument("m_mu_L needs nonnegative exponents");
    top = std::max(top, l);
  }
  const CharacterTable& table = registry.table(n);
  const auto& chi = table.row(mu);
  Rational total = 0;
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    if (chi[c] == 0) continue;
    const CycleType& tau = table.classes()[c];
    // The multigraded trace factors over the variable sets.
    const QSeries one_set = cycle_trace_series(tau, 1, top);
    BigInt trace = 1;
    for (int l : L) trace *= one_set[static_cast<std::size_t>(l)];
    total += Rational(BigInt(static_cast<long>(chi[c])) * trace, tau.centralizer_order());
  }
  total.canonicalize();
  return require_integer(total, "multigraded multiplicity");
}

QSeries isotypic_series(const Partition& lambda, int k, int bound, CharacterRegistry& registry) {
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("isotypic_series needs |lambda| >= 1");
  const CharacterTable& table = registry.table(n);
  const auto& chi = table.row(lambda);
  std::vector<Rational> acc(static_cast<std::size_t>(bound + 1), 0);
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    if (chi[c] == 0) continue;
    const CycleType& tau = table.classes()[c];
    const QSeries trace = cycle_trace_series(tau, k, bound);
    for (std::size_t r = 0; r < acc.size(); ++r) {
      acc[r] += Rational(BigInt(static_cast<long>(chi[c])) * trace[r], tau.centralizer_order());
    }
  }
  QSeries out;
  for (auto& value : acc) {
    value.canonicalize();
    out.push_back(require_integer(value, "isotypic multiplicity"));
  }
  return out;
}

StabilityReport verify_corollary2(int k, int n_max) {
  return timed_report("corollary2-stability", {{"k", k}, {"n_max", n_max}}, [&](auto& report) {
    // dims[n][r] by enumeration, cross-checked against Molien per entry.
    std::vector<std::vector<BigInt>> dims(static_cast<std::size_t>(n_max + 1));
    StabilityReport methods("invariant-dim-methods", nullptr);
    for (int n = 1; n <= n_max; ++n) {
      for (int r = 0; r <= n; ++r) {
        const BigInt by_profiles = invariant_dim(n, k, r, InvariantMethod::enumeration);
        const BigInt by_molien = invariant_dim(n, k, r, InvariantMethod::molien);
        methods.add({{"k", k}, {"n", n}, {"r", r}}, by_profiles, by_molien);
        dims[static_cast<std::size_t>(n)].push_back(by_profiles);
      }
    }
    for (int n = 1; n <= n_max; ++n) {
      for (int m = 1; m <= n; ++m) {
        for (int r = 0; r <= m; ++r) {
          report.add({{"k", k}, {"r", r}, {"m", m}, {"n", n}},
                     dims[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)],
                     dims[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)]);
        }
      }
    }
    for (const auto& instance : methods.instances()) {
      nlohmann::json params = instance.params;
      params["check"] = "enumeration-vs-molien";
      report.add(std::move(params), instance.lhs, instance.rhs);
    }
  });
}

StabilityReport verify_product_formula(int k, int n_max) {
  return timed_report("product-formula", {{"k", k}, {"n_max", n_max}}, [&](auto& report) {
    const QSeries product = product_series(k, n_max);
    for (int d = 0; d <= n_max; ++d) {
      for (int n = std::max(d, 1); n <= n_max; ++n) {
        report.add({{"k", k}, {"d", d}, {"n", n}}, product[static_cast<std::size_t>(d)],
                   static_cast<unsigned long>(enumerate_profiles(n, k, d).size()));
      }
    }
  });
}

StabilityReport verify_weyl_stability(int n_max) {
  return timed_report("weyl-stability", {{"n_max", n_max}}, [&](auto& report) {
    std::map<std::pair<Partition, int>, BigInt> memo;
    auto dim = [&](const Partition& lambda, int n) -> const BigInt& {
      auto key = std::make_pair(lambda, n);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, weyl_invariant_dim(lambda, n)).first;
      return it->second;
    };
    for (int size = 1; size <= n_max; ++size) {
      for (const auto& lambda : enumerate_partitions(size)) {
        for (int m = size; m <= n_max; ++m) {
          for (int n = m; n <= n_max; ++n) {
            report.add({{"lambda", lambda.parts()}, {"m", m}, {"n", n}}, dim(lambda, m),
                       dim(lambda, n));
          }
        }
      }
    }
  });
}

StabilityReport verify_g_stability(int n_max, int r_max) {
  return timed_report("g-stability", {{"n_max", n_max}, {"r_max", r_max}}, [&](auto& report) {
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        const int limit = n - mu[1];
        for (int size = 0; size <= limit; ++size) {
          for (const auto& lambda : enumerate_partitions(size)) {
            const BigInt base = g_coeff(lambda, mu);
            for (int r = 1; r <= r_max; ++r) {
              report.add({{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"r", r}}, base,
                         g_coeff(lambda, bump_first_part(mu, r)));
            }
          }
        }
      }
    }
  });
}

StabilityReport verify_multigraded(int k, int n_max, int r_max) {
  return timed_report(
      "theorem9-multigraded", {{"k", k}, {"n_max", n_max}, {"r_max", r_max}}, [&](auto& report) {
        for (int n = 1; n <= n_max; ++n) {
          for (const auto& mu : enumerate_partitions(n)) {
            const int limit = n - mu[1];
            const MultigradedSeries base = plethysm_series(mu, k, limit);
            for (int r = 1; r <= r_max; ++r) {
              const Partition bumped = bump_first_part(mu, r);
              const MultigradedSeries shifted = plethysm_series(bumped, k, limit);
              for (int d = 0; d <= limit; ++d) {
                for (const auto& L : enumerate_exponent_vectors(k, d)) {
                  const BigInt rhs = shifted.coeff(L);
                  report.add({{"mu", mu.parts()}, {"r", r}, {"L", L}}, base.coeff(L), rhs);
                  // Independent route for the shifted side.
                  report.add({{"mu", bumped.parts()}, {"L", L}, {"check", "filling-vs-class-sum"}},
                             rhs, m_mu_L(bumped, L));
                }
              }
            }
          }
        }
      });
}

StabilityReport verify_g_plethysm_agreement(int k, int n_max, int degree) {
  return timed_report("g-plethysm-agreement", {{"k", k}, {"n_max", n_max}, {"degree", degree}},
                      [&](auto& report) {
                        for (int n = 1; n <= n_max; ++n) {
                          for (const auto& mu : enumerate_partitions(n)) {
                            const auto expanded = g_via_plethysm(mu, k, degree);
                            for (int size = 0; size <= degree; ++size) {
                              for (const auto& lambda : enumerate_partitions(size, k)) {
                                auto it = expanded.find(lambda);
                                const BigInt lhs = it == expanded.end() ? BigInt(0) : it->second;
                                report.add({{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"k", k}},
                                           lhs, g_coeff(lambda, mu));
                              }
                            }
                          }
                        }
                      });
}

std::vector<StabilityReport> verify_stability_suite(int k, int n_max, int r_max,
                                                    const std::optional<Perturbation>& perturbation) {
  std::vector<StabilityReport> reports;
  reports.push_back(verify_corollary2(k, n_max));
  reports.push_back(verify_product_formula(k, n_max));
  reports.push_back(verify_weyl_stability(n_max));
  reports.push_back(verify_g_stability(n_max, r_max));
  reports.push_back(verify_multigraded(k, n_max, r_max));
  if (perturbation) {
    bool applied = false;
    for (auto& report : reports) {
      if (report.statement() == perturbation->statement) {
        report.perturb(perturbation->instance, perturbation->delta);
        applied = true;
      }
    }
    if (!applied) throw std::invalid_argument("perturbation names no report");
  }
  return reports;
}

}  // namespace stabilab

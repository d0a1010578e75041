#include "stabilab/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace stabilab {

std::string to_string(OrderFamily family) {
  switch (family) {
    case OrderFamily::grevlex: return "grevlex";
    case OrderFamily::grlex: return "grlex";
    case OrderFamily::lex: return "lex";
  }
  return "?";
}

OrderFamily parse_order_family(const std::string& text) {
  if (text == "grevlex" || text == "graded-reverse-lex") return OrderFamily::grevlex;
  if (text == "grlex" || text == "graded-lex") return OrderFamily::grlex;
  if (text == "lex") return OrderFamily::lex;
  throw std::invalid_argument("unknown order family '" + text + "'");
}

std::string to_string(Significance significance) {
  return significance == Significance::interleaved ? "interleaved" : "displayed";
}

Significance parse_significance(const std::string& text) {
  if (text == "interleaved") return Significance::interleaved;
  if (text == "displayed") return Significance::displayed;
  throw std::invalid_argument("unknown significance '" + text + "'");
}

MonomialOrder::MonomialOrder(OrderFamily family, std::vector<int> significance)
    : family_(family), significance_(std::move(significance)) {
  std::vector<int> sorted = significance_;
  std::ranges::sort(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("significance is not a permutation");
  }
}

MonomialOrder MonomialOrder::make(int k, int n, OrderFamily family, Significance significance) {
  std::vector<int> vars(static_cast<std::size_t>(k * n));
  for (std::size_t v = 0; v < vars.size(); ++v) vars[v] = static_cast<int>(v);
  if (significance == Significance::displayed) std::ranges::reverse(vars);
  return MonomialOrder(family, std::move(vars));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (is_graded()) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (family_ == OrderFamily::grevlex) {
    for (auto it = significance_.rbegin(); it != significance_.rend(); ++it) {
      const int x = a[static_cast<std::size_t>(*it)];
      const int y = b[static_cast<std::size_t>(*it)];
      if (x != y) return x < y ? 1 : -1;
    }
    return 0;
  }
  for (int v : significance_) {
    const int x = a[static_cast<std::size_t>(v)];
    const int y = b[static_cast<std::size_t>(v)];
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

nlohmann::json MonomialOrder::to_json() const {
  return {{"family", to_string(family_)}, {"significance", significance_}};
}

Monomial leading_monomial(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (best == nullptr || order.compare(m, *best) > 0) best = &m;
  }
  return *best;
}

namespace {

// Exponents permuted so that index 0 is the most significant variable.
struct Term {
  Monomial exps;
  int deg;
  Rational c;
};

// Terms in ascending order; the leading term is back().
using Poly = std::vector<Term>;

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : order_(order) {}

  int compare(const Monomial& a, int da, const Monomial& b, int db) const {
    if (order_.is_graded() && da != db) return da < db ? -1 : 1;
    if (order_.family() == OrderFamily::grevlex) {
      for (std::size_t t = a.size(); t-- > 0;) {
        if (a[t] != b[t]) return a[t] < b[t] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a[t] != b[t]) return a[t] < b[t] ? -1 : 1;
    }
    return 0;
  }

  Poly to_internal(const MultiPoly& f) const {
    Poly out;
    const auto& sig = order_.significance();
    for (const auto& [m, c] : f.terms()) {
      Monomial permuted(m.size());
      for (std::size_t t = 0; t < sig.size(); ++t) permuted[t] = m[static_cast<std::size_t>(sig[t])];
      out.push_back({std::move(permuted), total_degree(m), c});
    }
    std::ranges::sort(out, [this](const Term& x, const Term& y) { return compare(x.exps, x.deg, y.exps, y.deg) < 0; });
    return out;
  }

  MultiPoly to_external(const Poly& f, int k, int n) const {
    MultiPoly out(k, n);
    const auto& sig = order_.significance();
    for (const auto& term : f) {
      Monomial m(term.exps.size());
      for (std::size_t t = 0; t < sig.size(); ++t) m[static_cast<std::size_t>(sig[t])] = term.exps[t];
      out.add_term(m, term.c);
    }
    return out;
  }

  // f - c * x^shift * g
  Poly subtract_multiple(const Poly& f, const Rational& c, const Monomial& shift, int shift_deg,
                         const Poly& g) const {
    Poly out;
    out.reserve(f.size() + g.size());
    auto fi = f.begin();
    auto gi = g.begin();
    Monomial shifted(shift.size());
    while (fi != f.end() || gi != g.end()) {
      int cmp;
      if (gi != g.end()) {
        for (std::size_t t = 0; t < shift.size(); ++t) shifted[t] = gi->exps[t] + shift[t];
      }
      if (gi == g.end()) {
        cmp = -1;
      } else if (fi == f.end()) {
        cmp = 1;
      } else {
        cmp = compare(fi->exps, fi->deg, shifted, gi->deg + shift_deg);
      }
      if (cmp < 0) {
        out.push_back(*fi);
        ++fi;
      } else if (cmp > 0) {
        out.push_back({shifted, gi->deg + shift_deg, -c * gi->c});
        ++gi;
      } else {
        Rational v = fi->c - c * gi->c;
        if (v != 0) out.push_back({fi->exps, fi->deg, std::move(v)});
        ++fi;
        ++gi;
      }
    }
    return out;
  }

  static bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a[t] > b[t]) return false;
    }
    return true;
  }

  static void make_monic(Poly& f) {
    const Rational lead = f.back().c;
    for (auto& term : f) term.c /= lead;
  }

  // Full reduction: every remaining term is irreducible by `basis`.
  Poly reduce(Poly f, const std::vector<Poly>& basis) const {
    Poly remainder;
    Monomial shift;
    while (!f.empty()) {
      const Term& lead = f.back();
      const Poly* divisor = nullptr;
      for (const auto& g : basis) {
        if (divides(g.back().exps, lead.exps)) {
          divisor = &g;
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(lead);
        f.pop_back();
        continue;
      }
      shift.resize(lead.exps.size());
      for (std::size_t t = 0; t < shift.size(); ++t) shift[t] = lead.exps[t] - divisor->back().exps[t];
      const Rational c = lead.c / divisor->back().c;
      f = subtract_multiple(f, c, shift, lead.deg - divisor->back().deg, *divisor);
    }
    std::ranges::reverse(remainder);
    return remainder;
  }

  Poly s_polynomial(const Poly& f, const Poly& g) const {
    const Monomial& a = f.back().exps;
    const Monomial& b = g.back().exps;
    Monomial sf(a.size());
    Monomial sg(a.size());
    int df = 0;
    int dg = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
      const int l = std::max(a[t], b[t]);
      sf[t] = l - a[t];
      sg[t] = l - b[t];
      df += sf[t];
      dg += sg[t];
    }
    const Poly shifted_f = subtract_multiple(Poly{}, Rational(-1), sf, df, f);
    return subtract_multiple(shifted_f, Rational(1), sg, dg, g);
  }

 private:
  const MonomialOrder& order_;
};

Monomial lcm_of(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = std::max(a[t], b[t]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] > 0 && b[t] > 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leads() const {
  std::vector<Monomial> out;
  for (const auto& g : generators) out.push_back(leading_monomial(g, order));
  return out;
}

nlohmann::json GroebnerBasis::to_json() const {
  nlohmann::json doc;
  doc["k"] = generators.empty() ? 0 : generators.front().k();
  doc["n"] = generators.empty() ? 0 : generators.front().n();
  doc["order"] = order.to_json();
  doc["d_cap"] = d_cap ? nlohmann::json(*d_cap) : nlohmann::json(nullptr);
  doc["basis"] = nlohmann::json::array();
  for (const auto& g : generators) doc["basis"].push_back(g.to_json());
  return doc;
}

GroebnerBasis GroebnerBasis::from_json(const nlohmann::json& doc) {
  try {
    MonomialOrder order(parse_order_family(doc.at("order").at("family").get<std::string>()),
                        doc.at("order").at("significance").get<std::vector<int>>());
    std::optional<int> d_cap;
    if (!doc.at("d_cap").is_null()) d_cap = doc.at("d_cap").get<int>();
    GroebnerBasis basis{std::move(order), d_cap, {}};
    const int k = doc.at("k").get<int>();
    const int n = doc.at("n").get<int>();
    for (const auto& poly : doc.at("basis")) basis.generators.push_back(MultiPoly::from_json(k, n, poly));
    return basis;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed Groebner basis: ") + e.what());
  }
}

GroebnerBasis buchberger_homogeneous(const std::vector<MultiPoly>& generators, const MonomialOrder& order,
                                     std::optional<int> d_cap, const GroebnerLimits& limits) {
  if (d_cap && !order.is_graded()) {
    throw std::invalid_argument("degree truncation needs a graded monomial order");
  }
  std::map<int, std::vector<const MultiPoly*>> inputs;
  int k = 0;
  int n = 0;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("Groebner engine needs homogeneous generators");
    if (static_cast<std::size_t>(f.num_vars()) != order.significance().size()) {
      throw std::invalid_argument("monomial order does not match the ring");
    }
    k = f.k();
    n = f.n();
    inputs[f.total_degree()].push_back(&f);
  }
  GroebnerBasis result{order, d_cap, {}};
  if (inputs.empty()) return result;

  const Engine engine(order);
  std::vector<Poly> basis;
  // Pending pairs keyed (lcm degree, i, j) with i < j.
  std::set<std::tuple<int, std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_index;

  auto add_element = [&](Poly g) {
    Engine::make_monic(g);
    const std::size_t j = basis.size();
    basis.push_back(std::move(g));
    if (basis.size() > limits.max_elements) throw ResourceError("Groebner basis exceeds element cap");
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = basis[i].back().exps;
      const Monomial& b = basis[j].back().exps;
      if (coprime(a, b)) continue;
      pending.emplace(total_degree(lcm_of(a, b)), i, j);
      pending_index.emplace(i, j);
    }
    if (pending.size() > limits.max_pairs) throw ResourceError("Groebner pair queue exceeds cap");
  };

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_index.contains({std::min(a, b), std::max(a, b)});
  };

  int degree = inputs.begin()->first;
  while (true) {
    const bool more_inputs = inputs.lower_bound(degree) != inputs.end();
    if (!more_inputs && pending.empty()) break;
    if (d_cap && degree > *d_cap) break;

    if (auto it = inputs.find(degree); it != inputs.end()) {
      for (const MultiPoly* f : it->second) {
        Poly r = engine.reduce(engine.to_internal(*f), basis);
        if (!r.empty()) add_element(std::move(r));
      }
    }
    while (!pending.empty() && std::get<0>(*pending.begin()) == degree) {
      const auto [deg, i, j] = *pending.begin();
      pending.erase(pending.begin());
      pending_index.erase({i, j});
      const Monomial lcm = lcm_of(basis[i].back().exps, basis[j].back().exps);
      bool chain = false;
      for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
        if (l == i || l == j) continue;
        if (!Engine::divides(basis[l].back().exps, lcm)) continue;
        chain = !is_pending(i, l) && !is_pending(j, l);
      }
      if (chain) continue;
      Poly r = engine.reduce(engine.s_polynomial(basis[i], basis[j]), basis);
      if (!r.empty()) add_element(std::move(r));
    }
    ++degree;
  }

  // Tail reduction. Leading terms are already pairwise non-divisible.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Poly tail(basis[i].begin(), basis[i].end() - 1);
    std::vector<Poly> others;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(basis[j]);
    }
    Poly r = engine.reduce(std::move(tail), others);
    r.push_back(basis[i].back());
    reduced.push_back(std::move(r));
  }
  std::ranges::sort(reduced, [&](const Poly& a, const Poly& b) {
    return engine.compare(a.back().exps, a.back().deg, b.back().exps, b.back().deg) < 0;
  });
  for (const auto& g : reduced) result.generators.push_back(engine.to_external(g, k, n));
  return result;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& basis) {
  const Engine engine(basis.order);
  std::vector<Poly> internal;
  for (const auto& g : basis.generators) internal.push_back(engine.to_internal(g));
  return engine.to_external(engine.reduce(engine.to_internal(f), internal), f.k(), f.n());
}

LeadMonomialSet LeadMonomialSet::embedded(int wider_n) const {
  if (wider_n < n) throw std::invalid_argument("cannot embed into a smaller ring");
  LeadMonomialSet out{k, wider_n, {}};
  for (Monomial m : monomials) {
    m.resize(static_cast<std::size_t>(k * wider_n), 0);
    out.monomials.insert(std::move(m));
  }
  return out;
}

nlohmann::json LeadMonomialSet::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : monomials) out.push_back(m);
  return out;
}

std::vector<MultiPoly> invariant_ideal_generators(int k, int n, int max_degree) {
  std::vector<MultiPoly> out;
  for (int d = 1; d <= std::min(n, max_degree); ++d) {
    for (const auto& a : enumerate_exponent_vectors(k, d)) out.push_back(polarized_power_sum(a, n));
  }
  return out;
}

GroebnerBasis invariant_ideal_basis(int k, int n, std::optional<int> d_cap, const OrderChoice& choice,
                                    const CacheDirectory* cache) {
  const MonomialOrder order = MonomialOrder::make(k, n, choice.family, choice.significance);
  const std::string name = "k" + std::to_string(k) + "_n" + std::to_string(n) + "_" + to_string(choice.family) +
                           "_" + to_string(choice.significance) + "_d" +
                           (d_cap ? std::to_string(*d_cap) : std::string("full"));
  if (cache) {
    if (auto doc = cache->read("groebner", name)) {
      try {
        GroebnerBasis basis = GroebnerBasis::from_json(*doc);
        if (basis.order.significance() == order.significance() && basis.d_cap == d_cap) return basis;
      } catch (const std::invalid_argument&) {
        // Fall through and recompute.
      }
    }
  }
  GroebnerBasis basis =
      buchberger_homogeneous(invariant_ideal_generators(k, n, d_cap.value_or(n)), order, d_cap);
  if (cache) {
    nlohmann::json doc = basis.to_json();
    doc["k"] = k;
    doc["n"] = n;
    cache->write("groebner", name, doc);
  }
  return basis;
}

LeadMonomialSet lead_monomials_upto(int k, int n, int m, const OrderChoice& choice, const CacheDirectory* cache) {
  if (m < 1) throw std::invalid_argument("lead_monomials_upto needs m >= 1");
  // Truncation is only sound for graded orders; lex gets the full basis.
  const bool graded = choice.family != OrderFamily::lex;
  const GroebnerBasis basis = invariant_ideal_basis(k, n, graded ? std::optional<int>(m) : std::nullopt, choice, cache);
  LeadMonomialSet out{k, n, {}};
  for (auto& lead : basis.leads()) {
    if (total_degree(lead) <= m) out.monomials.insert(std::move(lead));
  }
  return out;
}

QSeries standard_monomial_counts(const std::vector<Monomial>& leads, int num_vars, int bound) {
  QSeries out;
  for (int d = 0; d <= bound; ++d) {
    if (binomial(num_vars + d - 1, d) > static_cast<unsigned long>(kMaxMonomialsPerDegree)) {
      throw ResourceError("standard monomial count exceeds the monomial cap");
    }
    unsigned long count = 0;
    for (const auto& m : monomials_of_degree(num_vars, d)) {
      const bool in_ideal = std::ranges::any_of(leads, [&](const Monomial& lead) {
        for (std::size_t v = 0; v < m.size(); ++v) {
          if (lead[v] > m[v]) return false;
        }
        return true;
      });
      if (!in_ideal) ++count;
    }
    out.push_back(count);
  }
  return out;
}

namespace {

nlohmann::json choice_json(const OrderChoice& choice) {
  return {{"family", to_string(choice.family)}, {"significance", to_string(choice.significance)}};
}

}  // namespace

StabilityReport verify_conjecture2(int k, int n, int m, const OrderChoice& choice, const CacheDirectory* cache) {
  if (m >= n) throw std::invalid_argument("verify_conjecture2 needs m < n");
  return timed_report(
      "conjecture2-leads", {{"k", k}, {"n", n}, {"m", m}, {"order", choice_json(choice)}}, [&](auto& report) {
        const LeadMonomialSet big = lead_monomials_upto(k, n, m, choice, cache);
        const LeadMonomialSet small = lead_monomials_upto(k, m, m, choice, cache).embedded(n);
        nlohmann::json only_n = nlohmann::json::array();
        nlohmann::json only_m = nlohmann::json::array();
        for (const auto& mono : big.monomials) {
          if (!small.monomials.contains(mono)) only_n.push_back(mono);
        }
        for (const auto& mono : small.monomials) {
          if (!big.monomials.contains(mono)) only_m.push_back(mono);
        }
        const bool equal = only_n.empty() && only_m.empty();
        nlohmann::json detail{{"leads", big.to_json()}};
        if (!equal) detail = {{"only_in_n", only_n}, {"only_in_m", only_m}};
        report.add({{"k", k}, {"n", n}, {"m", m}}, static_cast<unsigned long>(big.monomials.size()),
                   static_cast<unsigned long>(small.monomials.size()), equal, std::move(detail));
      });
}

StabilityReport coinvariant_hilbert_check(int k, int n, int m, const OrderChoice& choice,
                                          const CacheDirectory* cache) {
  if (m >= n) throw std::invalid_argument("coinvariant_hilbert_check needs m < n");
  return timed_report(
      "conjecture2-coinvariants", {{"k", k}, {"n", n}, {"m", m}, {"order", choice_json(choice)}},
      [&](auto& report) {
        const LeadMonomialSet big = lead_monomials_upto(k, n, m, choice, cache);
        const LeadMonomialSet small = lead_monomials_upto(k, m, m, choice, cache);
        const QSeries lhs = standard_monomial_counts({big.monomials.begin(), big.monomials.end()}, k * n, m);
        const QSeries h_small =
            standard_monomial_counts({small.monomials.begin(), small.monomials.end()}, k * m, m);
        const QSeries rhs =
            qseries_multiply(h_small, qseries_one_minus_power(1, -static_cast<long>(k) * (n - m), m), m);
        for (int r = 0; r <= m; ++r) {
          report.add({{"k", k}, {"n", n}, {"m", m}, {"r", r}}, lhs[static_cast<std::size_t>(r)],
                     rhs[static_cast<std::size_t>(r)]);
        }
      });
}

StabilityReport verify_qfactorial(int n, const OrderChoice& choice, const CacheDirectory* cache) {
  return timed_report("coinvariants-qfactorial", {{"n", n}, {"order", choice_json(choice)}}, [&](auto& report) {
    const GroebnerBasis basis = invariant_ideal_basis(1, n, std::nullopt, choice, cache);
    const int top = n * (n - 1) / 2 + 1;
    const QSeries counts = standard_monomial_counts(basis.leads(), n, top);
    QSeries qfact(static_cast<std::size_t>(top + 1), 0);
    qfact[0] = 1;
    for (int i = 1; i <= n; ++i) {
      // [i]_q = 1 + q + ... + q^{i-1}
      QSeries bracket(static_cast<std::size_t>(top + 1), 0);
      for (int e = 0; e < i && e <= top; ++e) bracket[static_cast<std::size_t>(e)] = 1;
      qfact = qseries_multiply(qfact, bracket, top);
    }
    BigInt total = 0;
    for (int d = 0; d <= top; ++d) {
      report.add({{"n", n}, {"d", d}}, counts[static_cast<std::size_t>(d)], qfact[static_cast<std::size_t>(d)]);
      total += counts[static_cast<std::size_t>(d)];
    }
    report.add({{"n", n}, {"check", "total-standard-monomials"}}, total, factorial(n));
  });
}

}  // namespace stabilab

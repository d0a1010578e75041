#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stabilab/characters.hpp"
#include "stabilab/common.hpp"
#include "stabilab/partitions.hpp"
#include "stabilab/report.hpp"
#include "stabilab/symfunc.hpp"

namespace stabilab {

enum class InvariantMethod { enumeration, molien };

// prod over cycles of tau of (1 - q^len)^{-copies}: the graded trace of a
// permutation of type tau on `copies` sets of n variables.
QSeries cycle_trace_series(const CycleType& tau, int copies, int bound);

// dim S^d(C^k (x) C^n)^{S_n}, by profile enumeration or by the Molien class sum.
BigInt invariant_dim(int n, int k, int d, InvariantMethod method);

// dim of the S_n invariants in the GL(n) module with highest weight lambda.
BigInt weyl_invariant_dim(const Partition& lambda, int n,
                          CharacterRegistry& registry = default_characters());

// Multiplicity of V^mu in the GL(|mu|) module with highest weight lambda.
BigInt g_coeff(const Partition& lambda, const Partition& mu,
               CharacterRegistry& registry = default_characters());

// g^lambda_mu for |lambda| <= bound, l(lambda) <= k, read off the Schur
// expansion of the plethysm series degree by degree. Zero entries omitted.
std::map<Partition, BigInt> g_via_plethysm(const Partition& mu, int k, int bound);

// Multiplicity of V^mu in the multidegree-L part of the polynomial ring on
// L.size() sets of |mu| variables.
BigInt m_mu_L(const Partition& mu, const ExponentVector& L,
              CharacterRegistry& registry = default_characters());

// Multiplicity of V^lambda in the total-degree-r part of the ring on k sets of
// |lambda| variables, r = 0..bound.
QSeries isotypic_series(const Partition& lambda, int k, int bound,
                        CharacterRegistry& registry = default_characters());

// Stability verifiers. Each returns one report with both sides of every
// instance.

// dim invariants in degree r agree for r <= m <= n <= n_max, plus agreement of
// the enumeration and Molien routes on every (n, r).
StabilityReport verify_corollary2(int k, int n_max);
// Coefficients of the product series equal |P^{n,k}_d| for d <= n <= n_max.
StabilityReport verify_product_formula(int k, int n_max);
// weyl_invariant_dim(lambda, m) == weyl_invariant_dim(lambda, n), |lambda| <= m <= n <= n_max.
StabilityReport verify_weyl_stability(int n_max);
// g(lambda, mu) == g(lambda, mu + r e1) for mu |- n <= n_max, |lambda| <= n - mu_2, r <= r_max.
StabilityReport verify_g_stability(int n_max, int r_max);
// Multigraded plethysm components of mu and mu + r e1 agree below n - mu_2,
// and the plethysm counts agree with class sums.
StabilityReport verify_multigraded(int k, int n_max, int r_max);
// g_via_plethysm agrees with g_coeff for |mu| <= n_max, |lambda| <= degree.
StabilityReport verify_g_plethysm_agreement(int k, int n_max, int degree);

struct Perturbation {
  std::string statement;
  std::size_t instance = 0;
  long delta = 1;
};

// All of the above at one (k, n_max, r_max). With a perturbation, the named
// instance has its left side shifted before reporting.
std::vector<StabilityReport> verify_stability_suite(
    int k, int n_max, int r_max, const std::optional<Perturbation>& perturbation = std::nullopt);

}  // namespace stabilab

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "stabilab/common.hpp"
#include "stabilab/partitions.hpp"
#include "stabilab/report.hpp"

namespace stabilab {

// Exponents of all k*n variables. Variable (set i, index j) sits at position
// j*k + i, so the layout reads x1, y1, x2, y2, ... and the ring on m < n
// indices embeds as a prefix.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Polynomial in k sets of n variables with exact rational coefficients.
class MultiPoly {
 public:
  MultiPoly(int k, int n);

  static MultiPoly constant(int k, int n, const Rational& c);
  // The variable {set}x_{index}, both zero-based.
  static MultiPoly variable(int k, int n, int set, int index);
  static MultiPoly monomial(int k, int n, Monomial exponents, const Rational& c = 1);

  static int var_index(int k, int set, int index) { return index * k + set; }

  int k() const { return k_; }
  int n() const { return n_; }
  int num_vars() const { return k_ * n_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // Degree in each variable set, for one monomial.
  std::vector<int> multidegree(const Monomial& m) const;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly derivative(int var) const;
  // op(d/dx) applied to *this, where op is read as a constant-coefficient
  // differential operator.
  MultiPoly apply_differential(const MultiPoly& op) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  // [{"exps": [...], "num": "...", "den": "..."}] in increasing monomial order.
  nlohmann::json to_json() const;
  static MultiPoly from_json(int k, int n, const nlohmann::json& doc);

 private:
  void check_compatible(const MultiPoly& other) const;

  int k_;
  int n_;
  std::map<Monomial, Rational> terms_;
};

// All monomials of total degree d in `num_vars` variables, increasing order.
std::vector<Monomial> monomials_of_degree(int num_vars, int d);

// sum_j prod_i ({i}x_j)^{a_i}; the constant 1 for a = 0.
MultiPoly polarized_power_sum(const ExponentVector& a, int n);

// {i}x_j -> {i}x_{sigma(j)}; sigma is a zero-based permutation of 0..n-1.
MultiPoly act(std::span<const int> sigma, const MultiPoly& f);

// A product p_{a^1} ... p_{a^r} of Weyl generators (0 < |a^i| <= n).
struct GeneratorProduct {
  std::vector<ExponentVector> factors;
  int degree = 0;
  MultiPoly product;
};

// Multisets of generators with total degree exactly d, deterministic order.
std::vector<std::vector<ExponentVector>> generator_multisets(int k, int n, int d);
std::vector<GeneratorProduct> generator_products_of_degree(int k, int n, int d);
// All products with total degree <= d_max, by degree.
std::vector<GeneratorProduct> generator_products(int k, int n, int d_max);

// Dimension of the span.
std::size_t rank_of(std::span<const MultiPoly> polys);

// Coefficients of an S_n-invariant polynomial on the canonical monomial of
// each profile of degree d; the profile order is enumerate_profiles(n, k, d).
// Two invariants are equal iff their coordinates are.
std::vector<Rational> invariant_coordinates(const MultiPoly& f, int d);

// Echelonized basis of a subspace of R_d. Element i has coefficient one at
// leads[i] and zero at every other lead.
struct GradedBasis {
  int degree = 0;
  std::vector<MultiPoly> elements;
  std::vector<Monomial> leads;

  std::size_t dim() const { return elements.size(); }
  // Trace of sigma on the span, assuming the span is sigma-stable.
  Rational trace(std::span<const int> sigma) const;
};

// Caps the number of monomials of a single degree that the ring code will
// allocate.
inline constexpr std::size_t kMaxMonomialsPerDegree = 250000;

// Degree-d harmonics: the joint kernel of p_a(d/dx) for 0 < |a| <= n.
GradedBasis harmonics_basis(int k, int n, int d);

// For each d <= n+1: the generator products of degree d number |P^{n,k}_d| and
// are linearly independent.
StabilityReport verify_theorem1(int k, int n);

// Smallest d <= d_cap at which the degree-d generator products are dependent.
std::optional<int> first_relation_degree(int k, int n, int d_cap);

// Injectivity of (h_alpha) -> sum h_alpha p_alpha from
// (+)_alpha H^{m - d(alpha)} into R_m, alpha ranging over the monomials in the
// generators of degree <= m (including the empty one). lhs is the rank, rhs
// the domain dimension.
StabilityReport quasifree_check(int k, int n, int m);

// Degree-by-degree truncation identities implied by quasi-freeness: with no
// lambda, the harmonic Hilbert series; with lambda |- n, the V^lambda
// isotypic version. lhs from harmonics, rhs from the product formula.
StabilityReport verify_quasifree_corollaries(int k, int n, int m,
                                             const std::optional<Partition>& lambda = std::nullopt);

}  // namespace stabilab

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "stabilab/common.hpp"
#include "stabilab/partitions.hpp"

namespace stabilab {

// Power series in one variable, coefficient i at index i. Implicitly
// truncated at size() - 1.
using QSeries = std::vector<BigInt>;

QSeries qseries_multiply(const QSeries& a, const QSeries& b, int bound);
// (1 - q^r)^e truncated at `bound`; e may be negative.
QSeries qseries_one_minus_power(int r, long e, int bound);
QSeries qseries_truncate(QSeries a, int bound);

// Finitely supported map from exponent vectors L in Z^k_{>=0} with |L| <= bound
// to integers. Terms above the bound are dropped on insertion.
class MultigradedSeries {
 public:
  MultigradedSeries(int k, int bound);

  int k() const { return k_; }
  int bound() const { return bound_; }
  const std::map<ExponentVector, BigInt>& coefficients() const { return coeffs_; }

  BigInt coeff(const ExponentVector& exponents) const;
  void add(const ExponentVector& exponents, const BigInt& value);

  // Terms of total degree exactly d.
  MultigradedSeries component(int d) const;
  MultigradedSeries truncated(int bound) const;
  // Specialization q_i = q, coefficients 0..bound.
  QSeries total_degree_coefficients() const;
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const MultigradedSeries& a, const MultigradedSeries& b) {
    return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }
  // Results carry the smaller bound of the operands.
  friend MultigradedSeries operator+(const MultigradedSeries& a, const MultigradedSeries& b);
  friend MultigradedSeries operator-(const MultigradedSeries& a, const MultigradedSeries& b);
  friend MultigradedSeries operator*(const MultigradedSeries& a, const MultigradedSeries& b);
  MultigradedSeries scaled(const BigInt& factor) const;

  // [{"exponents": [...], "coeff": "..."}] in increasing key order.
  nlohmann::json to_json() const;
  static MultigradedSeries from_json(int k, int bound, const nlohmann::json& doc);

 private:
  int k_;
  int bound_;
  std::map<ExponentVector, BigInt> coeffs_;
};

// Total order on monomials in q_1..q_k used to fill tableaux. Both options
// are graded, so the constant monomial is minimal.
enum class FillingOrder { graded_lex, graded_revlex };

// s_lambda(q_1, ..., q_k); the bound defaults to |lambda|.
MultigradedSeries schur_poly(const Partition& lambda, int k,
                             std::optional<int> bound = std::nullopt);

// s_mu[1 / ((1-q_1)...(1-q_k))] through total degree `bound`, as the weight
// generating function of column-strict fillings of mu by monomials.
MultigradedSeries plethysm_series(const Partition& mu, int k, int bound,
                                  FillingOrder order = FillingOrder::graded_lex);

// prod_{r>=1} (1 - q^r)^{-C(r+k-1, k-1)} through degree `bound`.
QSeries product_series(int k, int bound);

// Coefficients c_lambda with f = sum c_lambda s_lambda(q_1..q_k). f must be
// homogeneous and symmetric; throws std::invalid_argument otherwise.
std::map<Partition, BigInt> schur_expand(const MultigradedSeries& f);

}  // namespace stabilab

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabilab/cache.hpp"
#include "stabilab/polyring.hpp"
#include "stabilab/report.hpp"
#include "stabilab/symfunc.hpp"

namespace stabilab {

enum class OrderFamily { grevlex, grlex, lex };

std::string to_string(OrderFamily family);
OrderFamily parse_order_family(const std::string& text);

// How the k*n variables are ranked.
//   interleaved: x1 > y1 > x2 > y2 > ... > xn > yn (lowest index most
//                significant; degree-one leads do not depend on n)
//   displayed:   yn > xn > ... > y1 > x1 (the chain x1 <= y1 <= ... read
//                literally, largest last)
enum class Significance { interleaved, displayed };

std::string to_string(Significance significance);
Significance parse_significance(const std::string& text);

// A monomial order on the ring with k sets of n variables.
class MonomialOrder {
 public:
  MonomialOrder(OrderFamily family, std::vector<int> significance);
  static MonomialOrder make(int k, int n, OrderFamily family, Significance significance);

  OrderFamily family() const { return family_; }
  // significance()[0] is the most significant variable.
  const std::vector<int>& significance() const { return significance_; }
  bool is_graded() const { return family_ != OrderFamily::lex; }

  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  nlohmann::json to_json() const;

 private:
  OrderFamily family_;
  std::vector<int> significance_;
};

// Reduced, monic Groebner basis, complete through degree d_cap (or complete
// outright when d_cap is absent).
struct GroebnerBasis {
  MonomialOrder order;
  std::optional<int> d_cap;
  std::vector<MultiPoly> generators;  // ascending by leading monomial

  std::vector<Monomial> leads() const;
  nlohmann::json to_json() const;
  static GroebnerBasis from_json(const nlohmann::json& doc);
};

Monomial leading_monomial(const MultiPoly& f, const MonomialOrder& order);

struct GroebnerLimits {
  std::size_t max_elements = 20000;
  std::size_t max_pairs = 2000000;
};

// Buchberger with the normal strategy and the product and chain criteria.
// Inputs must be homogeneous; truncation requires a graded order.
GroebnerBasis buchberger_homogeneous(const std::vector<MultiPoly>& generators,
                                     const MonomialOrder& order, std::optional<int> d_cap,
                                     const GroebnerLimits& limits = {});

// Remainder of f on division by the basis (fully reduced).
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& basis);

// Leading monomials of total degree <= m, with exponents laid out for the
// ring on `n` indices (see Monomial).
struct LeadMonomialSet {
  int k = 0;
  int n = 0;
  std::set<Monomial> monomials;

  // The same monomials in the ring on `wider_n` >= n indices.
  LeadMonomialSet embedded(int wider_n) const;
  nlohmann::json to_json() const;
};

struct OrderChoice {
  OrderFamily family = OrderFamily::grevlex;
  Significance significance = Significance::interleaved;
};

// The generators p_a, 0 < |a| <= min(n, max_degree), of the ideal I_{k,n}.
std::vector<MultiPoly> invariant_ideal_generators(int k, int n, int max_degree);

// Groebner basis of I_{k,n} through degree d_cap (complete when absent),
// optionally read from / written to the cache under "groebner/".
GroebnerBasis invariant_ideal_basis(int k, int n, std::optional<int> d_cap, const OrderChoice& choice,
                                    const CacheDirectory* cache = nullptr);

LeadMonomialSet lead_monomials_upto(int k, int n, int m, const OrderChoice& choice,
                                    const CacheDirectory* cache = nullptr);

// Number of monomials of each degree 0..bound outside the ideal generated by
// `leads`, in a ring with num_vars variables.
QSeries standard_monomial_counts(const std::vector<Monomial>& leads, int num_vars, int bound);

// LG^{<=m}_{k,n} == LG^{<=m}_{k,m}.
StabilityReport verify_conjecture2(int k, int n, int m, const OrderChoice& choice,
                                   const CacheDirectory* cache = nullptr);

// (h_{k,n})_{<=m} == (h_{k,m} / (1-q)^{k(n-m)})_{<=m}, h counted by standard
// monomials.
StabilityReport coinvariant_hilbert_check(int k, int n, int m, const OrderChoice& choice,
                                          const CacheDirectory* cache = nullptr);

// Standard monomials of the complete basis of I_{1,n} against the
// coefficients of [n]_q!.
StabilityReport verify_qfactorial(int n, const OrderChoice& choice,
                                  const CacheDirectory* cache = nullptr);

}  // namespace stabilab

#ifndef COMMFAM_MONOMIAL_HPP
#define COMMFAM_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "commfam/varid.hpp"

namespace commfam {

/// Sparse monomial: factors sorted by VarId, exponents positive.
class Monomial {
 public:
  using Factor = std::pair<VarId, uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(VarId v, uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  uint32_t degree() const;
  uint32_t exponent(VarId v) const;

  Monomial times(const Monomial& o) const;
  /// Exact monomial quotient, nullopt if some exponent would go negative.
  std::optional<Monomial> divided_by(const Monomial& o) const;

  /// Graded lexicographic comparison: total degree first, then lexicographic
  /// on exponent vectors in increasing VarId order (larger exponent at the
  /// first differing variable wins).
  static int compare(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Factor> factors_;
};

/// Orders term maps leading-term-first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

}  // namespace commfam

#endif

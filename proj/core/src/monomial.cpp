#include "commfam/monomial.hpp"

#include <algorithm>

namespace commfam {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  // merge duplicates, drop zero exponents
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
}

Monomial Monomial::variable(VarId v, uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({v, exp});
  return m;
}

uint32_t Monomial::degree() const {
  uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

uint32_t Monomial::exponent(VarId v) const {
  for (const auto& f : factors_)
    if (f.first == v) return f.second;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  auto a = factors_.begin(), b = o.factors_.begin();
  while (b != o.factors_.end()) {
    if (a == factors_.end() || b->first < a->first) return std::nullopt;
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
      continue;
    }
    if (a->second < b->second) return std::nullopt;
    if (a->second > b->second) r.factors_.push_back({a->first, a->second - b->second});
    ++a;
    ++b;
  }
  while (a != factors_.end()) r.factors_.push_back(*a++);
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first != ib->first) {
      // the monomial with a positive exponent at the earlier variable is
      // lexicographically greater
      return ia->first < ib->first ? 1 : -1;
    }
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors_.end()) return 1;
  if (ib != b.factors_.end()) return -1;
  return 0;
}

}  // namespace commfam

#include "commfam/heisenberg.hpp"

#include <list>

#include "commfam/errors.hpp"
#include "commfam/structure.hpp"

namespace commfam {

namespace {

VecK unit_vec(size_t n, size_t i) {
  VecK v(n);
  v[i] = RatFunc::constant(1);
  return v;
}

}  // namespace

std::optional<HeisenbergBasis> heisenberg_recognize(const LieAlgebra& n) {
  size_t d = n.dim();
  if (d == 0 || d % 2 == 0) return std::nullopt;
  HeisenbergBasis hb;
  if (d == 1) {
    hb.z = unit_vec(1, 0);
    return hb;
  }
  Subspace zc = center(n);
  if (zc.dim() != 1) return std::nullopt;
  Subspace derived = product_space(n, Subspace::full(d), Subspace::full(d));
  if (!(derived == zc)) return std::nullopt;
  hb.z = zc.basis_row(0);

  // alternating form B on n/<z>: [u, v] = B(u, v) z
  auto pairing = [&](const VecK& u, const VecK& v) -> RatFunc {
    VecK br = n.bracket(u, v);
    auto coeff = express_in_rows(zc.basis(), br);
    if (!coeff)
      fail(ErrorCode::Internal, "bracket not in the centre during Darboux construction");
    return (*coeff)[0];
  };

  std::list<VecK> rem;
  for (size_t c : zc.non_pivot_cols()) rem.push_back(unit_vec(d, c));

  while (!rem.empty()) {
    VecK u = rem.front();
    rem.pop_front();
    auto vit = rem.begin();
    RatFunc buv;
    while (vit != rem.end()) {
      buv = pairing(u, *vit);
      if (!buv.is_zero()) break;
      ++vit;
    }
    if (vit == rem.end()) return std::nullopt;  // degenerate pairing
    VecK v = *vit;
    rem.erase(vit);
    RatFunc inv = buv.inverse();
    for (auto& e : v) e = e * inv;  // now B(u, v) = 1
    for (auto& w : rem) {
      RatFunc bwu = pairing(w, u);
      RatFunc bwv = pairing(w, v);
      for (size_t i = 0; i < d; ++i) w[i] = w[i] + bwu * v[i] - bwv * u[i];
    }
    hb.x.push_back(u);
    hb.y.push_back(v);
  }

  // re-verify the defining relations
  size_t k = hb.k();
  auto expect_zero = [&](const VecK& a, const VecK& b) {
    for (const auto& e : n.bracket(a, b))
      if (!e.is_zero()) fail(ErrorCode::Internal, "Darboux basis relation violated");
  };
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      expect_zero(hb.x[i], hb.x[j]);
      expect_zero(hb.y[i], hb.y[j]);
      VecK br = n.bracket(hb.x[i], hb.y[j]);
      for (size_t c = 0; c < d; ++c) {
        RatFunc want = (i == j) ? hb.z[c] : RatFunc();
        if (!(br[c] - want).is_zero())
          fail(ErrorCode::Internal, "Darboux basis pairing violated");
      }
    }
    expect_zero(hb.x[i], hb.z);
    expect_zero(hb.y[i], hb.z);
  }
  return hb;
}

}  // namespace commfam

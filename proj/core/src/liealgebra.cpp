#include "commfam/liealgebra.hpp"

#include <nlohmann/json.hpp>
#include <set>

#include "commfam/errors.hpp"

namespace commfam {

using nlohmann::json;

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       std::vector<VarId> params, const BracketMap& brackets)
    : name_(std::move(name)), labels_(std::move(basis_labels)), params_(std::move(params)) {
  size_t n = labels_.size();
  {
    std::set<std::string> seen;
    for (const auto& label : labels_)
      if (!seen.insert(label).second)
        fail(ErrorCode::Parse, "duplicate basis label: " + label);
  }
  coords_.reserve(n);
  for (const auto& label : labels_)
    coords_.push_back(VarRegistry::instance().fresh_coordinate(label));
  table_.assign(n >= 2 ? n * (n - 1) / 2 : 0, VecK(n));
  for (const auto& [ij, comps] : brackets) {
    auto [i, j] = ij;
    if (i >= j || j >= n) fail(ErrorCode::DimensionMismatch, "bracket indices out of range");
    for (const auto& [k, val] : comps) {
      if (k >= n) fail(ErrorCode::DimensionMismatch, "bracket component out of range");
      if (!val.uses_only(VarKind::Parameter))
        fail(ErrorCode::Parse, "structure constant not in the coefficient field K");
      table_[pair_index(i, j)][k] = val;
    }
  }
  verify_jacobi();
}

size_t LieAlgebra::pair_index(size_t i, size_t j) const {
  // i < j; row-major over the strict upper triangle
  return i * dim() - i * (i + 1) / 2 + (j - i - 1);
}

RatFunc LieAlgebra::c(size_t i, size_t j, size_t k) const {
  if (i == j) return RatFunc();
  if (i < j) return table_[pair_index(i, j)][k];
  return -table_[pair_index(j, i)][k];
}

VecK LieAlgebra::basis_bracket(size_t i, size_t j) const {
  if (i == j) return VecK(dim());
  if (i < j) return table_[pair_index(i, j)];
  VecK v = table_[pair_index(j, i)];
  for (auto& x : v) x = -x;
  return v;
}

VecK LieAlgebra::bracket(const VecK& u, const VecK& v) const {
  size_t n = dim();
  if (u.size() != n || v.size() != n)
    fail(ErrorCode::DimensionMismatch, "bracket operand size");
  VecK out(n);
  for (size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || i == j) continue;
      RatFunc f = u[i] * v[j];
      const VecK& cij = basis_bracket(i, j);
      for (size_t k = 0; k < n; ++k)
        if (!cij[k].is_zero()) out[k] += f * cij[k];
    }
  }
  return out;
}

RatFunc LieAlgebra::linear_form(const VecK& v) const {
  if (v.size() != dim()) fail(ErrorCode::DimensionMismatch, "linear_form size");
  RatFunc out;
  for (size_t i = 0; i < dim(); ++i)
    if (!v[i].is_zero()) out += v[i] * RatFunc(Poly::variable(coords_[i]));
  return out;
}

LabelMap LieAlgebra::label_map() const {
  LabelMap m;
  for (size_t i = 0; i < dim(); ++i) m[labels_[i]] = coords_[i];
  for (VarId p : params_) m[VarRegistry::instance().label(p)] = p;
  return m;
}

void LieAlgebra::verify_jacobi() const {
  size_t n = dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        VecK ei(n), ej(n), ek(n);
        ei[i] = RatFunc::constant(1);
        ej[j] = RatFunc::constant(1);
        ek[k] = RatFunc::constant(1);
        VecK s = bracket(basis_bracket(i, j), ek);
        VecK t = bracket(basis_bracket(j, k), ei);
        VecK u = bracket(basis_bracket(k, i), ej);
        for (size_t m = 0; m < n; ++m) {
          RatFunc sum = s[m] + t[m] + u[m];
          if (!sum.is_zero())
            fail(ErrorCode::Jacobi, "Jacobi identity fails on (" + labels_[i] + ", " +
                                        labels_[j] + ", " + labels_[k] + ") of " + name_);
        }
      }
}

std::string LieAlgebra::to_json() const {
  json j;
  j["name"] = name_;
  j["dim"] = dim();
  j["basis"] = labels_;
  std::vector<std::string> ps;
  for (VarId p : params_) ps.push_back(VarRegistry::instance().label(p));
  j["params"] = ps;
  json brackets = json::array();
  for (size_t i = 0; i < dim(); ++i)
    for (size_t jj = i + 1; jj < dim(); ++jj) {
      const VecK& v = table_[pair_index(i, jj)];
      json comps = json::object();
      for (size_t k = 0; k < dim(); ++k) {
        if (v[k].is_zero()) continue;
        if (!v[k].is_polynomial())
          fail(ErrorCode::Unsupported,
               "JSON serialization requires polynomial structure constants");
        comps[std::to_string(k)] = poly_to_string(v[k].num());
      }
      if (!comps.empty())
        brackets.push_back({{"i", i}, {"j", jj}, {"result", comps}});
    }
  j["brackets"] = brackets;
  return j.dump(2);
}

LieAlgebra LieAlgebra::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid algebra JSON: ") + e.what());
  }
  try {
    size_t n = j.at("dim").get<size_t>();
    auto labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.size() != n) fail(ErrorCode::Parse, "dim does not match basis length");
    std::vector<VarId> params;
    LabelMap param_labels;
    if (j.contains("params")) {
      for (const auto& name : j.at("params").get<std::vector<std::string>>()) {
        if (name.size() < 2 || name[0] != 't')
          fail(ErrorCode::Parse, "parameter names must be t<k>: " + name);
        uint32_t k = static_cast<uint32_t>(std::stoul(name.substr(1)));
        if (k == 0) fail(ErrorCode::Parse, "parameter indices start at t1");
        VarId p = VarRegistry::instance().parameter(k - 1);
        params.push_back(p);
        param_labels[name] = p;
      }
    }
    BracketMap brackets;
    if (j.contains("brackets")) {
      for (const auto& entry : j.at("brackets")) {
        size_t i = entry.at("i").get<size_t>();
        size_t jj = entry.at("j").get<size_t>();
        if (i >= jj || jj >= n) fail(ErrorCode::Parse, "bracket indices out of range");
        for (const auto& [key, val] : entry.at("result").items()) {
          size_t k = std::stoul(key);
          Poly coeff = poly_parse(val.get<std::string>(), param_labels);
          if (!coeff.uses_only(VarKind::Parameter))
            fail(ErrorCode::Parse, "bracket coefficient must lie in K");
          brackets[{i, jj}][k] = RatFunc(coeff);
        }
      }
    }
    std::string name = j.value("name", std::string("algebra"));
    return LieAlgebra(name, labels, params, brackets);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid algebra JSON: ") + e.what());
  }
}

uint64_t LieAlgebra::fingerprint() const {
  // FNV-1a over a canonical serialization of the structure constants
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  mix(std::to_string(dim()));
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = i + 1; j < dim(); ++j) {
      const VecK& v = table_[pair_index(i, j)];
      for (size_t k = 0; k < dim(); ++k)
        if (!v[k].is_zero()) {
          mix("|" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
              ":" + ratfunc_to_string(v[k]));
        }
    }
  return h;
}

LieAlgebra LieAlgebra::change_basis(const MatK& p, const std::string& new_name) const {
  size_t n = dim();
  if (p.rows() != n || p.cols() != n)
    fail(ErrorCode::DimensionMismatch, "change_basis matrix shape");
  BracketMap brackets;
  MatK rows = p;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      VecK br = bracket(rows.row(i), rows.row(j));
      auto coeffs = express_in_rows(rows, br);
      if (!coeffs) fail(ErrorCode::DimensionMismatch, "change_basis matrix is singular");
      for (size_t k = 0; k < n; ++k)
        if (!(*coeffs)[k].is_zero()) brackets[{i, j}][k] = (*coeffs)[k];
    }
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  return LieAlgebra(new_name, labels, params_, brackets);
}

}  // namespace commfam

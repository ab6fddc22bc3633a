#include "commfam/catalog.hpp"

#include "commfam/errors.hpp"

namespace commfam {

namespace {

QMatrix zero_matrix(int n) {
  return QMatrix(n, std::vector<Rational>(n, Rational(0)));
}

QMatrix unit_matrix(int n, int i, int j) {
  QMatrix m = zero_matrix(n);
  m[i][j] = 1;
  return m;
}

QMatrix mat_comm(const QMatrix& a, const QMatrix& b) {
  int n = static_cast<int>(a.size());
  QMatrix r = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (int j = 0; j < n; ++j) r[i][j] -= b[i][k] * a[k][j];
    }
  return r;
}

std::string idx_label(const std::string& stem, int i, int j) {
  return stem + std::to_string(i + 1) + std::to_string(j + 1);
}

/// Structure constants of a matrix Lie algebra from its basis matrices.
BracketMap brackets_from_matrices(const std::vector<QMatrix>& basis) {
  size_t k = basis.size();
  size_t nn = basis.empty() ? 0 : basis[0].size() * basis[0].size();
  std::vector<VecK> rows;
  for (const QMatrix& m : basis) {
    VecK flat;
    flat.reserve(nn);
    for (const auto& row : m)
      for (const auto& v : row) flat.push_back(RatFunc::constant(v));
    rows.push_back(flat);
  }
  MatK basis_rows = MatK::from_rows(rows, nn);
  BracketMap bm;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      QMatrix c = mat_comm(basis[i], basis[j]);
      VecK flat;
      flat.reserve(nn);
      for (const auto& row : c)
        for (const auto& v : row) flat.push_back(RatFunc::constant(v));
      auto coeffs = express_in_rows(basis_rows, flat);
      if (!coeffs) fail(ErrorCode::Internal, "matrix family not closed under bracket");
      for (size_t m = 0; m < k; ++m)
        if (!(*coeffs)[m].is_zero()) bm[{i, j}][m] = (*coeffs)[m];
    }
  return bm;
}

}  // namespace

std::vector<QMatrix> classical_basis_matrices(const std::string& family, int n) {
  std::vector<QMatrix> basis;
  if (family == "gl") {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis.push_back(unit_matrix(n, i, j));
  } else if (family == "sl") {
    if (n == 2) {
      basis.push_back(unit_matrix(2, 0, 1));  // e
      basis.push_back(unit_matrix(2, 1, 0));  // f
      QMatrix h = zero_matrix(2);
      h[0][0] = 1;
      h[1][1] = -1;
      basis.push_back(h);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) basis.push_back(unit_matrix(n, i, j));
      for (int i = 0; i + 1 < n; ++i) {
        QMatrix h = zero_matrix(n);
        h[i][i] = 1;
        h[i + 1][i + 1] = -1;
        basis.push_back(h);
      }
    }
  } else if (family == "so") {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        QMatrix m = zero_matrix(n);
        m[i][j] = 1;
        m[j][i] = -1;
        basis.push_back(m);
      }
  } else if (family == "sp") {
    if (n % 2 != 0) fail(ErrorCode::UnknownName, "sp requires even size");
    int m = n / 2;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        QMatrix a = zero_matrix(n);
        a[i][j] = 1;
        a[m + j][m + i] = -1;
        basis.push_back(a);
      }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        QMatrix b = zero_matrix(n);
        b[i][m + j] = 1;
        b[j][m + i] = 1;
        basis.push_back(b);
      }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        QMatrix c = zero_matrix(n);
        c[m + i][j] = 1;
        c[m + j][i] = 1;
        basis.push_back(c);
      }
  } else {
    fail(ErrorCode::UnknownName, "not a classical matrix family: " + family);
  }
  return basis;
}

namespace {

std::vector<std::string> classical_labels(const std::string& family, int n) {
  std::vector<std::string> labels;
  if (family == "gl") {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) labels.push_back(idx_label("x", i, j));
  } else if (family == "sl") {
    if (n == 2) return {"e", "f", "h"};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) labels.push_back(idx_label("x", i, j));
    for (int i = 0; i + 1 < n; ++i) labels.push_back("h" + std::to_string(i + 1));
  } else if (family == "so") {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) labels.push_back(idx_label("x", i, j));
  } else if (family == "sp") {
    int m = n / 2;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) labels.push_back(idx_label("a", i, j));
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) labels.push_back(idx_label("b", i, j));
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) labels.push_back(idx_label("c", i, j));
  }
  return labels;
}

}  // namespace

std::optional<std::pair<std::string, int>> parse_classical_name(const std::string& name) {
  for (const std::string fam : {"gl", "sl", "so", "sp"}) {
    if (name.rfind(fam, 0) == 0 && name.size() > fam.size()) {
      std::string rest = name.substr(fam.size());
      if (rest.find_first_not_of("0123456789") == std::string::npos)
        return std::make_pair(fam, std::stoi(rest));
    }
  }
  return std::nullopt;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "gl",     "sl",      "so",      "sp",       "heis",
      "strictly_upper", "borel_sl2", "abelian", "filiform", "oscillator"};
  return names;
}

LieAlgebra catalog(const std::string& name, int size) {
  // two-index labels of the matrix families stay unambiguous up to size 9
  bool matrix_family = name == "gl" || name == "sl" || name == "so" || name == "sp" ||
                       name == "strictly_upper";
  int cap = matrix_family ? 9 : 33;
  if (size < 1 || size > cap)
    fail(ErrorCode::UnknownName, "catalog size out of range: " + std::to_string(size));
  std::string tag = name + std::to_string(size);

  if (name == "gl" || name == "sl" || name == "so" || name == "sp") {
    auto basis = classical_basis_matrices(name, size);
    if (basis.empty()) fail(ErrorCode::UnknownName, "empty classical family");
    return LieAlgebra(tag, classical_labels(name, size), {}, brackets_from_matrices(basis));
  }
  if (name == "strictly_upper") {
    if (size < 2) fail(ErrorCode::UnknownName, "strictly_upper needs size >= 2");
    std::vector<QMatrix> basis;
    std::vector<std::string> labels;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) {
        basis.push_back(unit_matrix(size, i, j));
        labels.push_back(idx_label("x", i, j));
      }
    return LieAlgebra(tag, labels, {}, brackets_from_matrices(basis));
  }
  if (name == "heis") {
    if (size % 2 == 0) fail(ErrorCode::UnknownName, "heis needs odd dimension");
    int k = (size - 1) / 2;
    std::vector<std::string> labels;
    for (int i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
    labels.push_back("z");
    BracketMap bm;
    for (int i = 0; i < k; ++i) bm[{size_t(i), size_t(k + i)}][size - 1] = RatFunc::constant(1);
    return LieAlgebra(tag, labels, {}, bm);
  }
  if (name == "borel_sl2") {
    if (size != 2) fail(ErrorCode::UnknownName, "borel_sl2 has dimension 2");
    BracketMap bm;
    bm[{0, 1}][1] = RatFunc::constant(1);  // [h, e] = e
    return LieAlgebra(tag, {"h", "e"}, {}, bm);
  }
  if (name == "abelian") {
    std::vector<std::string> labels;
    for (int i = 1; i <= size; ++i) labels.push_back("x" + std::to_string(i));
    return LieAlgebra(tag, labels, {}, {});
  }
  if (name == "filiform") {
    if (size < 3) fail(ErrorCode::UnknownName, "filiform needs dimension >= 3");
    std::vector<std::string> labels;
    for (int i = 1; i <= size; ++i) labels.push_back("e" + std::to_string(i));
    BracketMap bm;
    for (int i = 1; i + 1 < size; ++i) bm[{0, size_t(i)}][i + 1] = RatFunc::constant(1);
    return LieAlgebra(tag, labels, {}, bm);
  }
  if (name == "oscillator") {
    if (size != 4) fail(ErrorCode::UnknownName, "oscillator has dimension 4");
    BracketMap bm;
    bm[{0, 1}][2] = RatFunc::constant(1);   // [h, x] = y
    bm[{0, 2}][1] = RatFunc::constant(-1);  // [h, y] = -x
    bm[{1, 2}][3] = RatFunc::constant(1);   // [x, y] = z
    return LieAlgebra(tag, {"h", "x", "y", "z"}, {}, bm);
  }
  fail(ErrorCode::UnknownName, "unknown catalog name: " + name);
}

}  // namespace commfam

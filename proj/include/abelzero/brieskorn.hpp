#pragma once

// Normal forms in the Brieskorn module Q[x]/Q[f], a free Q[t]-module with
// basis x, ..., x^{d-1} on which t acts as multiplication by f.

#include <utility>
#include <vector>

#include "abelzero/polynomial.hpp"

namespace abelzero {

struct BrieskornClass {
  int d = 0;
  std::vector<UniPoly> c;  // c[i-1] is the coordinate on x^i, a polynomial in t

  bool is_zero() const;
  friend bool operator==(const BrieskornClass&, const BrieskornClass&) = default;
};

/// Coordinates of omega modulo Q[f]; f must be monic of degree >= 2.
BrieskornClass normal_form(const UniPoly& omega, const UniPoly& f);

/// omega lies in Q[f].
bool is_zero_class(const UniPoly& omega, const UniPoly& f);

/// Number of pairs in vn_basis(m, n), which is n - floor(n/m).
int vn_dimension(int m, int n);

/// Pairs (i, j) with 1 <= i <= m-1, j >= 0, i + j*m <= n, ordered by i + j*m.
std::vector<std::pair<int, int>> vn_basis(int m, int n);

}  // namespace abelzero

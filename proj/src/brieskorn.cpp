#include "abelzero/brieskorn.hpp"

#include <algorithm>
#include <stdexcept>

#include "abelzero/algebra.hpp"

namespace abelzero {

bool BrieskornClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const UniPoly& p) { return p.is_zero(); });
}

BrieskornClass normal_form(const UniPoly& omega, const UniPoly& f) {
  if (f.degree() < 2) throw std::domain_error("normal form needs deg f >= 2");
  if (f.leading() != 1) throw std::domain_error("normal form needs a monic f");
  const int d = f.degree();
  BrieskornClass out{d, std::vector<UniPoly>(static_cast<std::size_t>(d - 1))};
  if (omega.is_zero()) return out;
  const std::vector<UniPoly> q = gadic_expand(omega, f);
  for (int i = 1; i < d; ++i) {
    std::vector<Rational> coords(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) coords[j] = q[j].coeff(static_cast<std::size_t>(i));
    out.c[static_cast<std::size_t>(i - 1)] = UniPoly(std::move(coords));
  }
  return out;
}

bool is_zero_class(const UniPoly& omega, const UniPoly& f) { return normal_form(omega, f).is_zero(); }

int vn_dimension(int m, int n) {
  if (m < 2 || n < 1) throw std::invalid_argument("vn_dimension needs m >= 2 and n >= 1");
  return n - n / m;
}

std::vector<std::pair<int, int>> vn_basis(int m, int n) {
  if (m < 2 || n < 1) throw std::invalid_argument("vn_basis needs m >= 2 and n >= 1");
  std::vector<std::pair<int, int>> out;
  for (int w = 1; w <= n; ++w) {
    if (w % m == 0) continue;
    out.emplace_back(w % m, w / m);
  }
  return out;
}

}  // namespace abelzero

#include "latcusp/matrix.hpp"

namespace latcusp {

Int det(const IntMat& a) {
  if (a.rows() != a.cols()) throw SpecError("det: matrix not square");
  const size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det(const RatMat& a) {
  if (a.rows() != a.cols()) throw SpecError("det: matrix not square");
  const size_t n = a.rows();
  RatMat m = a;
  Rat d = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(k, p);
      d = -d;
    }
    d *= m(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) / m(k, k);
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw SpecError("inverse: matrix not square");
  const size_t n = a.rows();
  RatMat m = a;
  RatMat inv = RatMat::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw SpecError("inverse: singular matrix");
    m.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rat piv = m(k, k);
    for (size_t j = 0; j < n; ++j) {
      m(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rat f = m(i, k);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace latcusp

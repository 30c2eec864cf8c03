#include "dspectra/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dspectra {

IntMatrix::IntMatrix(int order)
    : order_(order), entries_(static_cast<size_t>(order) * order, 0) {
  if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
}

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (int i = 0; i < order_; ++i) t += at(i, i);
  return t;
}

IntMatrix shifted(IntMatrix m, const Int& s) {
  for (int i = 0; i < m.order(); ++i) m.at(i, i) += s;
  return m;
}

IntPolynomial charpoly(const IntMatrix& m) {
  const int n = m.order();
  // c holds the coefficients of det(xI - A_r) for the leading principal
  // r x r block, highest degree first. Each round applies the Berkowitz
  // Toeplitz operator built from one new row/column pair.
  std::vector<Int> c{1, -m.at(0, 0)};
  std::vector<Int> t, v, mv, cnew;
  for (int r = 1; r < n; ++r) {
    t.assign(static_cast<size_t>(r) + 2, 0);
    t[0] = 1;
    t[1] = -m.at(r, r);
    v.assign(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) v[i] = m.at(i, r);
    for (int i = 2; i <= r + 1; ++i) {
      Int dot = 0;
      for (int j = 0; j < r; ++j) dot += m.at(r, j) * v[j];
      t[i] = -dot;
      if (i <= r) {
        mv.assign(static_cast<size_t>(r), 0);
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) mv[a] += m.at(a, b) * v[b];
        v.swap(mv);
      }
    }
    cnew.assign(static_cast<size_t>(r) + 2, 0);
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        if (i - j <= r + 1) cnew[i] += t[i - j] * c[j];
    c.swap(cnew);
  }
  std::vector<Int> ascending(c.rbegin(), c.rend());
  return IntPolynomial(std::move(ascending));
}

Int determinant(IntMatrix m) {
  const int n = m.order();
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

int rank(IntMatrix m) {
  const int n = m.order();
  Int prev = 1;
  int r = 0;
  while (r < n) {
    int pi = -1, pj = -1;
    for (int i = r; i < n && pi < 0; ++i)
      for (int j = r; j < n; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != r)
      for (int j = 0; j < n; ++j) std::swap(m.at(r, j), m.at(pi, j));
    if (pj != r)
      for (int i = 0; i < n; ++i) std::swap(m.at(i, r), m.at(i, pj));
    for (int i = r + 1; i < n; ++i) {
      for (int j = r + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j)) / prev;
      m.at(i, r) = 0;
    }
    prev = m.at(r, r);
    ++r;
  }
  return r;
}

}  // namespace dspectra

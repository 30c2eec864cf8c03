#pragma once

#include <vector>

#include "dspectra/bigint.hpp"
#include "dspectra/polynomial.hpp"

namespace dspectra {

// Square matrix of exact integers. No rounding happens anywhere in this
// module.
class IntMatrix {
 public:
  explicit IntMatrix(int order);
  static IntMatrix identity(int order);

  int order() const { return order_; }
  Int& at(int r, int c) { return entries_[static_cast<size_t>(r) * order_ + c]; }
  const Int& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * order_ + c];
  }
  Int trace() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int order_;
  std::vector<Int> entries_;
};

// m + s*I
IntMatrix shifted(IntMatrix m, const Int& s);

// det(xI - m) as a monic integer polynomial, computed division-free by the
// Berkowitz vector recurrence. Exact for every integer input.
IntPolynomial charpoly(const IntMatrix& m);

// Exact determinant via fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);

// Exact rank over the rationals via fraction-free elimination with full
// pivoting.
int rank(IntMatrix m);

}  // namespace dspectra

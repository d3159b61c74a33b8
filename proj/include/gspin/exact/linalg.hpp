#ifndef GSPIN_EXACT_LINALG_HPP
#define GSPIN_EXACT_LINALG_HPP

#include "gspin/exact/matrix.hpp"

#include <optional>

namespace gspin {

// Fraction-free Bareiss determinant.  Rows are scaled to integers first.
Rat bareiss_det(const Mat& a);

struct DetInverse {
  Rat det;
  std::optional<Mat> inverse;
};

DetInverse det_and_inverse(const Mat& a);

// Throws std::domain_error on a singular matrix.
Mat inverse(const Mat& a);

std::size_t rank(const Mat& a);

// Basis of the right kernel, one column per basis vector.
Mat nullspace(const Mat& a);

Mat antidiag_sign_matrix(std::size_t n);

}  // namespace gspin

#endif

#include "gspin/exact/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace gspin {

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? "," : "") << m(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

Rat bareiss_det(const Mat& a) {
  if (!a.square())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return Rat(1);
  std::vector<Int> m(n * n);
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den().get_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = a(i, j).num() * (l / a(i, j).den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0)
        ++p;
      if (p == n)
        return Rat(0);
      for (std::size_t j = 0; j < n; ++j)
        std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = t;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return Rat(Int(sign * at(n - 1, n - 1)), scale);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero())
      ++p;
    if (p == m.rows())
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::swap(m(r, j), m(p, j));
    Rat inv = m(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero())
        continue;
      Rat f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

DetInverse det_and_inverse(const Mat& a) {
  DetInverse out{bareiss_det(a), std::nullopt};
  if (out.det.is_zero())
    return out;
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Mat::identity(n));
  rref(aug);
  out.inverse = aug.block(0, n, n, n);
  return out;
}

Mat inverse(const Mat& a) {
  auto r = det_and_inverse(a);
  if (!r.inverse)
    throw std::domain_error("inverse of singular matrix");
  return *r.inverse;
}

std::size_t rank(const Mat& a) {
  Mat m = a;
  return rref(m).size();
}

Mat nullspace(const Mat& a) {
  Mat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c])
      free.push_back(c);
  Mat basis(a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -m(r, free[k]);
  }
  return basis;
}

Mat antidiag_sign_matrix(std::size_t n) {
  Mat j(n, n);
  for (std::size_t i = 0; i < n; ++i)
    j(i, n - 1 - i) = i % 2 == 0 ? 1 : -1;
  return j;
}

}  // namespace gspin

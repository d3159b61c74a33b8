#include "gspin/dual_side.hpp"

#include "gspin/exact/linalg.hpp"
#include "gspin/exact/mpoly.hpp"

#include <stdexcept>

namespace gspin {

Mat symplectic_form(std::size_t n) {
  Mat jp = antidiag_sign_matrix(n);
  Mat j(2 * n, 2 * n);
  j.set_block(0, n, jp);
  j.set_block(n, 0, -jp.transpose());
  return j;
}

bool in_gsp(const Mat& h, const Rat& similitude) {
  Mat j = symplectic_form(h.rows() / 2);
  return h.transpose() * j * h == similitude * j;
}

GSpElt levi_elt(const Mat& g, const Rat& a0) {
  if (a0.is_zero())
    throw std::invalid_argument("levi_elt: similitude must be nonzero");
  const std::size_t n = g.rows();
  Mat jp = antidiag_sign_matrix(n);
  Mat m(2 * n, 2 * n);
  m.set_block(0, 0, g);
  m.set_block(n, n, a0 * (jp * inverse(g).transpose() * inverse(jp)));
  return {m, a0};
}

Mat nilpotent_of(const Mat& y) {
  const std::size_t n = y.rows();
  Mat a(2 * n, 2 * n);
  a.set_block(0, n, y * inverse(antidiag_sign_matrix(n)));
  return a;
}

bool in_gsp_lie(const Mat& a) {
  Mat j = symplectic_form(a.rows() / 2);
  return (a.transpose() * j + j * a).is_zero();
}

Mat adjoint_action(const GSpElt& m, const Mat& y) {
  const std::size_t n = y.rows();
  Mat c = m.mat * nilpotent_of(y) * inverse(m.mat);
  Mat shape = c;
  shape.set_block(0, n, Mat(n, n));
  if (!shape.is_zero())
    throw std::logic_error("adjoint action left the unipotent radical");
  return c.block(0, n, n, n) * antidiag_sign_matrix(n);
}

Mat adjoint_closed_form(const Mat& g, const Rat& a0, const Mat& y) {
  return a0.inverse() * (g * y * g.transpose());
}

Sym2Satake sym2_satake(const std::vector<Rat>& chi, const Rat& eta) {
  Sym2Satake s;
  for (std::size_t i = 0; i < chi.size(); ++i)
    for (std::size_t j = i; j < chi.size(); ++j)
      s.eigenvalues.push_back(chi[i] * chi[j] * eta);
  s.l_poly = {Rat(1)};
  for (const auto& lambda : s.eigenvalues) {
    std::vector<Rat> next(s.l_poly.size() + 1, Rat(0));
    for (std::size_t k = 0; k < s.l_poly.size(); ++k) {
      next[k] += s.l_poly[k];
      next[k + 1] -= lambda * s.l_poly[k];
    }
    s.l_poly = next;
  }
  return s;
}

namespace {

std::vector<Mat> sym_basis(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<Mat> basis;
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = i; j < hi; ++j) {
      Mat e(n, n);
      e(i, j) = 1;
      e(j, i) = 1;
      basis.push_back(e);
    }
  return basis;
}

}  // namespace

Mat sym2_action_matrix(const GSpElt& m) {
  const std::size_t n = m.mat.rows() / 2;
  auto basis = sym_basis(n, 0, n);
  Mat a(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    Mat img = adjoint_action(m, basis[c]);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        a(r++, c) = img(i, j);
  }
  return a;
}

LeviBlocks levi_restriction_blocks(std::size_t n1, std::size_t n2, const Mat& g1, const Mat& g2, const Rat& a0) {
  const std::size_t n = n1 + n2;
  auto m = levi_elt(block_diag<Rat>({g1, g2}), a0);
  // the three blocks as sets of (row, col) supports in the upper triangle
  auto in_y1 = [&](std::size_t i, std::size_t j) { return i < n1 && j < n1; };
  auto in_y4 = [&](std::size_t i, std::size_t j) { return i >= n1 && j >= n1; };
  auto in_y2 = [&](std::size_t i, std::size_t j) { return !in_y1(i, j) && !in_y4(i, j); };
  LeviBlocks out{0, 0, 0, true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat e(n, n);
      e(i, j) = 1;
      e(j, i) = 1;
      int kind = in_y1(i, j) ? 1 : (in_y4(i, j) ? 4 : 2);
      (kind == 1 ? out.dim_y1 : (kind == 4 ? out.dim_y4 : out.dim_y2))++;
      Mat img = adjoint_action(m, e);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          if (img(r, c).is_zero())
            continue;
          bool same = kind == 1 ? in_y1(r, c) : (kind == 4 ? in_y4(r, c) : in_y2(r, c));
          if (!same)
            out.invariant = false;
        }
    }
  return out;
}

}  // namespace gspin

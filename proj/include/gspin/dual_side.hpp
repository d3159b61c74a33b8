#ifndef GSPIN_DUAL_SIDE_HPP
#define GSPIN_DUAL_SIDE_HPP

#include "gspin/exact/matrix.hpp"

#include <vector>

namespace gspin {

Mat symplectic_form(std::size_t n);

struct GSpElt {
  Mat mat;
  Rat similitude;
};

// t(h) J h = similitude * J
bool in_gsp(const Mat& h, const Rat& similitude);

GSpElt levi_elt(const Mat& g, const Rat& a0);

// The nilpotent element with upper-right block Y J'^-1.
Mat nilpotent_of(const Mat& y);
// Lie algebra membership: tA J + J A = 0
bool in_gsp_lie(const Mat& a);

// Y' with m nil(Y) m^-1 = nil(Y'), computed by conjugation.
Mat adjoint_action(const GSpElt& m, const Mat& y);
// Closed form a0^-1 g Y tg.
Mat adjoint_closed_form(const Mat& g, const Rat& a0, const Mat& y);

struct Sym2Satake {
  std::vector<Rat> eigenvalues;  // chi_i chi_j eta for i <= j
  std::vector<Rat> l_poly;       // coefficients of prod (1 - lambda T), lowest degree first
};

Sym2Satake sym2_satake(const std::vector<Rat>& chi, const Rat& eta);

// Matrix of Ad(m) on symmetric Y, in the basis E_ii and E_ij + E_ji (i < j).
Mat sym2_action_matrix(const GSpElt& m);

struct LeviBlocks {
  std::size_t dim_y2;
  std::size_t dim_y1;
  std::size_t dim_y4;
  bool invariant;
};

LeviBlocks levi_restriction_blocks(std::size_t n1, std::size_t n2, const Mat& g1, const Mat& g2, const Rat& a0);

}  // namespace gspin

#endif

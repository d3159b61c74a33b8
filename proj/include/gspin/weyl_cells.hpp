#ifndef GSPIN_WEYL_CELLS_HPP
#define GSPIN_WEYL_CELLS_HPP

#include "gspin/exact/matrix.hpp"

#include <map>
#include <set>
#include <vector>

namespace gspin {

// Permutation of {0..n-1} acting on characters by e_i -> e_{image[i]}.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> image);
  static Perm identity(int n);
  static Perm simple(int n, int i);  // swaps e_i and e_{i+1}, i from 1
  static Perm longest(int n);

  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  Perm inverse() const;
  int length() const;
  // Reduced word in simple reflections, letters from 1.
  std::vector<int> reduced_word() const;
  // Whether w sends the root e_i - e_j to a positive root.
  bool keeps_positive(int i, int j) const { return (*this)(i) < (*this)(j); }

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.image_ == b.image_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.image_ < b.image_; }

private:
  std::vector<int> image_;
};

// Block sizes of a composition of n.
using Composition = std::vector<int>;

Perm longest_of_levi(const Composition& blocks);
// Simple roots 1..n-1 lying in the Levi of the composition.
std::set<int> levi_simple_roots(const Composition& blocks);
Composition composition_of(int n, const std::set<int>& simple_roots);

struct BesselElt {
  Perm w;
  Composition levi;  // w = w_G * w_M for this standard Levi
  std::set<int> theta_plus;
};

// Elements w with (w alpha > 0 implies w alpha simple) for every simple alpha.
std::vector<BesselElt> bessel_set(int n);
std::vector<Perm> bessel_set_by_levi(int n);
BesselElt bessel_element(const Perm& w);

bool bruhat_leq(const Perm& v, const Perm& w);
int bessel_distance(const Perm& w, const Perm& w_prime);
// Length of the longest strict chain w' < ... < w inside B(G), found by search.
int longest_bessel_chain(const Perm& w, const Perm& w_prime);

struct RootPair {
  int i, j;  // the root e_i - e_j with i < j
  friend bool operator<(const RootPair& a, const RootPair& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
  friend bool operator==(const RootPair& a, const RootPair& b) { return a.i == b.i && a.j == b.j; }
};

struct USplitting {
  std::vector<RootPair> plus;
  std::vector<RootPair> minus;
};

USplitting u_splitting(const Perm& w);

struct TorusDesc {
  std::size_t rank = 0;
  Mat basis;  // cocharacter basis vectors as columns
  bool finite() const { return rank == 0; }
};

struct TransverseTorus {
  TorusDesc a_w;
  TorusDesc a_w_prime;
  TorusDesc transverse;  // A_w intersected with the derived group of M_{w'}
  bool splits;           // transverse + A_{w'} recovers A_w in rank, with A_{w'} inside A_w
};

TransverseTorus transverse_torus(const Perm& w, const Perm& w_prime);

}  // namespace gspin

#endif

#ifndef GSPIN_ROOT_DATA_HPP
#define GSPIN_ROOT_DATA_HPP

#include "gspin/exact/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gspin {

using IntVec = std::vector<std::int64_t>;

enum class GroupKind { gspin_odd, spin_odd, so_odd, gl };

std::string to_string(GroupKind k);

// Simple roots and coroots are written in ambient coordinates; the pairing
// between the two ambient spaces is the standard dot product.
struct RootDatum {
  GroupKind kind;
  int n = 0;
  std::vector<std::string> char_basis;
  std::vector<std::string> cochar_basis;
  std::vector<RatVec> char_lattice;
  std::vector<RatVec> cochar_lattice;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;

  std::vector<std::vector<std::int64_t>> cartan() const;
};

std::int64_t pair(const IntVec& x, const IntVec& y);

RootDatum build_root_datum(GroupKind kind, int n);

// Cartan matrix of type B_n or A_{n-1}, entry (i, j) = <alpha_i, alpha_j^vee>.
std::vector<std::vector<std::int64_t>> standard_cartan(GroupKind kind, int n);

struct LatticeMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  Mat matrix;  // columns are images of source basis vectors

  LatticeMap then(const LatticeMap& next) const;
  bool injective() const;
};

struct SpinTorusEmbedding {
  LatticeMap j;
  LatticeMap pr;
  LatticeMap covering;  // expected images beta_i^vee -> gamma_i^vee
};

SpinTorusEmbedding spin_torus_embedding(int n);

struct PairingReport {
  Rat rho_alpha_n;            // via the normalized invariant form
  Rat rho_alpha_n_coroot;     // via the coroot
  Rat alphahat_cochar;
  Rat en_cochar;
  Rat t_exponent;
};

PairingReport pairing_report(int n);

// Signed permutation: e_i -> sign(image[i]) * e_{|image[i]|}, indices from 1.
class SignedPerm {
public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> image);
  static SignedPerm identity(int n);
  static SignedPerm simple(int n, int i);  // s_1..s_n of type B_n

  int rank() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  IntVec act(const IntVec& v) const;
  Mat matrix() const;
  SignedPerm inverse() const;
  int length() const;

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.image_ == b.image_; }

private:
  std::vector<int> image_;
};

std::vector<IntVec> positive_roots_b(int n);

SignedPerm weyl_w_h(int n);
SignedPerm weyl_w_theta(int n);
SignedPerm word_product(int n, const std::vector<int>& word);

// Reduced words for w_H and w_theta as products of simple reflections.
std::vector<int> reduced_word_w_theta(int n);
std::vector<int> reduced_word_w_h(int n);

struct WeylLengths {
  int l_w_h;
  int l_w_theta;
  int l_w0;
};

WeylLengths weyl_lengths(int n);

}  // namespace gspin

#endif

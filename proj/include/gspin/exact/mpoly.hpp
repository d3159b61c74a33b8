#ifndef GSPIN_EXACT_MPOLY_HPP
#define GSPIN_EXACT_MPOLY_HPP

#include "gspin/exact/matrix.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gspin {

using Exponent = std::vector<std::uint32_t>;

struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse polynomial with rational coefficients.  A polynomial with an empty
// variable list is a constant and combines with polynomials over any ring.
class MPoly {
public:
  using TermMap = std::map<Exponent, Rat, GradedLex>;

  MPoly() = default;
  MPoly(int c) : MPoly(Rat(c)) { }
  MPoly(const Rat& c);

  static MPoly variable(const std::vector<std::string>& vars, std::size_t index);
  static std::vector<MPoly> variables(const std::vector<std::string>& vars);
  static MPoly constant(const std::vector<std::string>& vars, const Rat& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t var_index(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  long total_degree() const;
  long degree_in(std::size_t var) const;

  MPoly derivative(std::size_t var) const;
  MPoly derivative(const std::string& name) const { return derivative(var_index(name)); }
  Rat evaluate(std::span<const Rat> point) const;
  // Replaces the variable by a rational value; the ring is unchanged.
  MPoly specialize(std::size_t var, const Rat& value) const;
  // Coefficient of var^k, as a polynomial over the same ring.
  MPoly coefficient(std::size_t var, std::uint32_t k) const;
  // Substitutes images[i] for variable i.
  MPoly compose(const std::vector<MPoly>& images) const;

  std::string to_string() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

private:
  void adopt(const std::vector<std::string>& vars);
  void add_term(const Exponent& e, const Rat& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

using PolyMat = Matrix<MPoly>;

PolyMat to_poly(const Mat& m);

// Determinant of the matrix of partial derivatives d map[i] / d vars[j].
MPoly jacobian_det(const std::vector<MPoly>& map, const std::vector<std::string>& vars);
PolyMat jacobian_matrix(const std::vector<MPoly>& map, const std::vector<std::string>& vars);

}  // namespace gspin

#endif

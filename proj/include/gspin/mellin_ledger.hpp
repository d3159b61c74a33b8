#ifndef GSPIN_MELLIN_LEDGER_HPP
#define GSPIN_MELLIN_LEDGER_HPP

#include "gspin/exact/affine.hpp"
#include "gspin/exact/matrix.hpp"
#include "gspin/exact/random.hpp"

#include <map>
#include <string>
#include <vector>

namespace gspin {

// Exponents of absolute values |x|^(p + q s), keyed by variable name.
class ExpVector {
public:
  const AffineExp& get(const std::string& var) const;
  bool has(const std::string& var) const { return exps_.count(var) != 0; }
  void add(const std::string& var, const AffineExp& e);
  const std::map<std::string, AffineExp>& entries() const { return exps_; }

  ExpVector& operator+=(const ExpVector& o);
  friend ExpVector operator+(ExpVector a, const ExpVector& b) { return a += b; }
  friend ExpVector operator*(const Rat& k, const ExpVector& v);
  friend bool operator==(const ExpVector& a, const ExpVector& b);

private:
  std::map<std::string, AffineExp> exps_;
};

std::string a_var(std::size_t i);  // 1-based
std::string d_var(std::size_t i);  // 1-based
inline const std::string kDetY = "detY";
inline const std::string kHalf = "half";

ExpVector integrand_exponents(std::size_t n);

// Listed: a_n^2 = 1/(4 d_n) for n even, |det Y| = |d_1...d_n|^-1.
// Factorized: a_n^2 = 1/d_n for every n, det Y = (-1/2)^n / (d_1...d_n), as produced by
// the big-cell factorization of g.
enum class SubstitutionRules { listed, factorized };

ExpVector substitute(const ExpVector& v, std::size_t n, SubstitutionRules rules);

struct DLedger {
  SubstitutionRules rules;
  AffineExp nu;                // exponent of |1/2|
  std::vector<AffineExp> tau;  // exponents of |d_i/d_1| for i = 2..n
  AffineExp center;            // exponent of |d_1|
  AffineExp nu_closed_form;
  bool nu_matches;
};

AffineExp nu_closed_form(std::size_t n);
DLedger d_substitution(std::size_t n, SubstitutionRules rules = SubstitutionRules::factorized);

struct ValuationCheck {
  bool ok;
  RatVec a;
  Rat s;
  Rat original;  // v_p of the integrand monomial
  Rat d_form;    // v_p of |1/2|^nu |d_1|^center prod |d_i/d_1|^tau_i
};

// Compares valuations at p for the given a and s.
ValuationCheck valuation_check(const DLedger& ledger, const RatVec& a, const Rat& s, const Int& p);
// Random canonical a scaled by random powers of p, checked at s = 0 and s = 1.
std::vector<ValuationCheck> valuation_oracle(const DLedger& ledger, TrialRng& rng, const Int& p,
                                             std::size_t samples);

struct MeasureSlice {
  bool ok;
  std::vector<Rat> integrand;  // exponents of |a_i| at s = 0
  std::vector<Rat> measure;    // i - 1 from the Jacobian, k_i from the quotient
};

MeasureSlice s0_slice(std::size_t n);

struct OmegaArgument {
  Rat lhs;             // det(Y)^2 prod a_i^-2
  Rat rhs_listed;      // 4^(n+1)/d_1 for n even, 4^n/d_1 for n odd
  Rat constant;        // lhs * d_1
  bool holds;          // lhs == rhs_listed
};

OmegaArgument omega_argument_check(const RatVec& a);

}  // namespace gspin

#endif

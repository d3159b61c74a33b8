#include "gspin/mellin_ledger.hpp"

#include "gspin/bruhat_engine.hpp"
#include "gspin/error.hpp"
#include "gspin/exact/linalg.hpp"
#include "gspin/exact/padic.hpp"
#include "gspin/orbit_measure.hpp"

#include <stdexcept>

namespace gspin {

const AffineExp& ExpVector::get(const std::string& var) const {
  static const AffineExp zero{};
  auto it = exps_.find(var);
  return it == exps_.end() ? zero : it->second;
}

void ExpVector::add(const std::string& var, const AffineExp& e) {
  auto& slot = exps_[var];
  slot += e;
  if (slot.p.is_zero() && slot.q.is_zero())
    exps_.erase(var);
}

ExpVector& ExpVector::operator+=(const ExpVector& o) {
  for (const auto& [k, v] : o.exps_)
    add(k, v);
  return *this;
}

ExpVector operator*(const Rat& k, const ExpVector& v) {
  ExpVector out;
  for (const auto& [var, e] : v.exps_)
    out.add(var, k * e);
  return out;
}

bool operator==(const ExpVector& a, const ExpVector& b) { return a.exps_ == b.exps_; }

std::string a_var(std::size_t i) { return "a" + std::to_string(i); }
std::string d_var(std::size_t i) { return "d" + std::to_string(i); }

ExpVector integrand_exponents(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("integrand_exponents: n must be at least 2");
  const Rat nn(static_cast<long>(n));
  ExpVector v;
  for (std::size_t i = 1; i <= n; ++i)
    v.add(a_var(i), {Rat(static_cast<long>(i) - 1), -nn});
  v.add(kDetY, {-nn / 2, (2 * nn - 1) / 2});
  v.add(kHalf, {nn * nn / 2, -nn / 2});
  return v;
}

namespace {

// |a_i| = |1/2| |d_i d_{i+1}|^(-1/2)
ExpVector rule_for(const std::string& var, std::size_t n, SubstitutionRules rules) {
  ExpVector r;
  const Rat minus_half(-1, 2);
  if (var == kDetY) {
    for (std::size_t j = 1; j <= n; ++j)
      r.add(d_var(j), {Rat(-1), Rat(0)});
    if (rules == SubstitutionRules::factorized)
      r.add(kHalf, {Rat(static_cast<long>(n)), Rat(0)});
    return r;
  }
  if (var == kHalf || var.rfind("d", 0) == 0) {
    r.add(var, {Rat(1), Rat(0)});
    return r;
  }
  if (var.rfind("a", 0) == 0) {
    std::size_t i = std::stoul(var.substr(1));
    if (i >= 1 && i < n) {
      r.add(kHalf, {Rat(1), Rat(0)});
      r.add(d_var(i), {minus_half, Rat(0)});
      r.add(d_var(i + 1), {minus_half, Rat(0)});
      return r;
    }
    if (i == n) {
      if (rules == SubstitutionRules::listed && n % 2 == 0)
        r.add(kHalf, {Rat(1), Rat(0)});
      r.add(d_var(n), {minus_half, Rat(0)});
      return r;
    }
  }
  throw VerificationError("d_substitution", var, "no substitution rule");
}

// Scalar times exponent: each rule is constant in s, so the product stays affine.
ExpVector scale_rule(const ExpVector& rule, const AffineExp& e) {
  ExpVector out;
  for (const auto& [var, c] : rule.entries())
    out.add(var, {c.p * e.p, c.p * e.q});
  return out;
}

Rat val(const Rat& x, const Int& p) {
  PadicVal v = padic_val(x, p);
  if (v.infinite())
    throw VerificationError("valuation_oracle", "v_p", "zero argument");
  return Rat(*v.value);
}

}  // namespace

ExpVector substitute(const ExpVector& v, std::size_t n, SubstitutionRules rules) {
  ExpVector out;
  for (const auto& [var, e] : v.entries())
    out += scale_rule(rule_for(var, n, rules), e);
  return out;
}

AffineExp nu_closed_form(std::size_t n) {
  const Rat nn(static_cast<long>(n));
  Rat tail = n % 2 == 0 ? nn * (nn + 1) / 2 : nn * (nn - 1) / 2;
  return {nn * nn / 2 + tail - 1, -nn / 2 - nn};
}

DLedger d_substitution(std::size_t n, SubstitutionRules rules) {
  ExpVector sub = substitute(integrand_exponents(n), n, rules);
  DLedger led;
  led.rules = rules;
  for (const auto& [var, e] : sub.entries()) {
    if (var == kHalf)
      continue;
    bool known = false;
    for (std::size_t j = 1; j <= n; ++j)
      known = known || var == d_var(j);
    if (!known)
      throw VerificationError("d_substitution", var, "variable left after substitution");
  }
  led.nu = sub.get(kHalf);
  for (std::size_t j = 1; j <= n; ++j)
    led.center += sub.get(d_var(j));
  for (std::size_t i = 2; i <= n; ++i)
    led.tau.push_back(sub.get(d_var(i)));
  led.nu_closed_form = nu_closed_form(n);
  led.nu_matches = led.nu == led.nu_closed_form;
  return led;
}

ValuationCheck valuation_check(const DLedger& ledger, const RatVec& a, const Rat& s, const Int& p) {
  const std::size_t n = a.size();
  if (ledger.tau.size() + 1 != n)
    throw std::invalid_argument("valuation_check: ledger size differs from a");
  ExpVector in = integrand_exponents(n);
  Rat v_half = val(Rat(1, 2), p);

  Rat orig;
  for (std::size_t i = 1; i <= n; ++i)
    orig += in.get(a_var(i)).at(s) * val(a[i - 1], p);
  orig += in.get(kDetY).at(s) * val(bareiss_det(y_matrix(a)), p);
  orig += in.get(kHalf).at(s) * v_half;

  TorusCoords t = torus_coordinates(a);
  Rat dform = ledger.nu.at(s) * v_half + ledger.center.at(s) * val(t.d[0], p);
  for (std::size_t i = 2; i <= n; ++i)
    dform += ledger.tau[i - 2].at(s) * val(t.d[i - 1] / t.d[0], p);
  return {orig == dform, a, s, orig, dform};
}

std::vector<ValuationCheck> valuation_oracle(const DLedger& ledger, TrialRng& rng, const Int& p,
                                             std::size_t samples) {
  const std::size_t n = ledger.tau.size() + 1;
  std::vector<ValuationCheck> out;
  for (std::size_t k = 0; k < samples; ++k) {
    RatVec a = rng.nonzero_vector(n);
    for (auto& x : a) {
      long e = static_cast<long>(rng.uniform(-3, 3));
      x *= Rat(p).pow(e);
    }
    for (int s = 0; s <= 1; ++s)
      out.push_back(valuation_check(ledger, a, Rat(s), p));
  }
  return out;
}

MeasureSlice s0_slice(std::size_t n) {
  ExpVector in = integrand_exponents(n);
  QuotientExponents q = quotient_measure_exponents(n);
  MeasureSlice m;
  m.ok = q.residue.is_zero() && q.k.size() + 1 == n;
  for (std::size_t i = 1; i <= n; ++i) {
    m.integrand.push_back(in.get(a_var(i)).at(Rat(0)));
    m.measure.push_back(i < n && i - 1 < q.k.size() ? q.k[i - 1] : Rat(static_cast<long>(i) - 1));
    m.ok = m.ok && m.integrand.back() == m.measure.back();
  }
  return m;
}

OmegaArgument omega_argument_check(const RatVec& a) {
  const std::size_t n = a.size();
  Rat det_y = bareiss_det(y_matrix(a));
  Rat lhs = det_y * det_y;
  for (const auto& x : a)
    lhs /= x * x;
  TorusCoords t = torus_coordinates(a);
  Rat four_pow = Rat(4).pow(static_cast<long>(n % 2 == 0 ? n + 1 : n));
  OmegaArgument o{lhs, four_pow / t.d[0], lhs * t.d[0], false};
  o.holds = o.lhs == o.rhs_listed;
  return o;
}

}  // namespace gspin

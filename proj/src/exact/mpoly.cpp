#include "gspin/exact/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gspin {

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  auto da = std::accumulate(a.begin(), a.end(), 0ull);
  auto db = std::accumulate(b.begin(), b.end(), 0ull);
  if (da != db)
    return da < db;
  return a < b;
}

MPoly::MPoly(const Rat& c) {
  if (!c.is_zero())
    terms_.emplace(Exponent{}, c);
}

MPoly MPoly::variable(const std::vector<std::string>& vars, std::size_t index) {
  if (index >= vars.size())
    throw std::out_of_range("variable index out of range");
  MPoly p;
  p.vars_ = vars;
  Exponent e(vars.size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

std::vector<MPoly> MPoly::variables(const std::vector<std::string>& vars) {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < vars.size(); ++i)
    out.push_back(variable(vars, i));
  return out;
}

MPoly MPoly::constant(const std::vector<std::string>& vars, const Rat& c) {
  MPoly p(c);
  p.adopt(vars);
  return p;
}

std::size_t MPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    throw std::invalid_argument("unknown variable " + name);
  return static_cast<std::size_t>(it - vars_.begin());
}

void MPoly::adopt(const std::vector<std::string>& vars) {
  if (vars_ == vars)
    return;
  if (!vars_.empty())
    throw std::invalid_argument("polynomials over different variable lists");
  TermMap moved;
  for (auto& [e, c] : terms_)
    moved.emplace(Exponent(vars.size(), 0), c);
  vars_ = vars;
  terms_ = std::move(moved);
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat MPoly::constant_term() const {
  auto it = terms_.find(Exponent(vars_.size(), 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

long MPoly::total_degree() const {
  if (terms_.empty())
    return -1;
  const auto& e = terms_.rbegin()->first;
  return static_cast<long>(std::accumulate(e.begin(), e.end(), 0ull));
}

long MPoly::degree_in(std::size_t var) const {
  long d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_)
    d = std::max<long>(d, e[var]);
  return d;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r;
  r.vars_ = vars_;
  if (var >= vars_.size())
    throw std::out_of_range("derivative variable out of range");
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0)
      continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * Rat(static_cast<long>(e[var])));
  }
  return r;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (!vars_.empty() && point.size() != vars_.size())
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i])
        t *= point[i].pow(e[i]);
    total += t;
  }
  return total;
}

MPoly MPoly::specialize(std::size_t var, const Rat& value) const {
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c * value.pow(e[var]));
  }
  return r;
}

MPoly MPoly::coefficient(std::size_t var, std::uint32_t k) const {
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[var] != k)
      continue;
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (images.size() != vars_.size())
    throw std::invalid_argument("compose needs one image per variable");
  MPoly r;
  for (const auto& [e, c] : terms_) {
    MPoly t(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i])
        t *= images[i].pow(e[i]);
    r += t;
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool monic = true;
    for (auto k : e)
      monic = monic && k == 0;
    Rat a = c.abs();
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool wrote = false;
    if (!(a == Rat(1)) || monic) {
      os << a.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i])
        continue;
      os << (wrote ? "*" : "") << vars_[i];
      if (e[i] > 1)
        os << '^' << e[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.vars_.empty()) {
    if (!o.terms_.empty())
      add_term(Exponent(vars_.size(), 0), o.terms_.begin()->second);
    return *this;
  }
  adopt(o.vars_);
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_)
    c = -c;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.vars_.empty() || b.vars_.empty()) {
    const MPoly& k = a.vars_.empty() ? a : b;
    const MPoly& p = a.vars_.empty() ? b : a;
    r.vars_ = p.vars_;
    if (k.terms_.empty())
      return r;
    Rat s = k.terms_.begin()->second;
    for (const auto& [e, c] : p.terms_)
      r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }
  if (a.vars_ != b.vars_)
    throw std::invalid_argument("polynomials over different variable lists");
  r.vars_ = a.vars_;
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1u)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.vars_ == b.vars_)
    return a.terms_ == b.terms_;
  if (a.is_constant() && b.is_constant())
    return a.constant_term() == b.constant_term();
  return false;
}

PolyMat to_poly(const Mat& m) {
  return m.map([](const Rat& x) { return MPoly(x); });
}

PolyMat jacobian_matrix(const std::vector<MPoly>& map, const std::vector<std::string>& vars) {
  PolyMat jac(map.size(), vars.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j)
      jac(i, j) = map[i].vars().empty() ? MPoly(0) : map[i].derivative(vars[j]);
  return jac;
}

MPoly jacobian_det(const std::vector<MPoly>& map, const std::vector<std::string>& vars) {
  if (map.size() != vars.size())
    throw std::invalid_argument("jacobian_det needs a square system");
  return det_by_minors(jacobian_matrix(map, vars));
}

}  // namespace gspin

#include "gspin/exact/rat.hpp"

#include <stdexcept>

namespace gspin {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

Rat Rat::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::pow(long e) const {
  Rat base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.q_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.q_.get_den_mpz_t(), k);
  return Rat(n, d);
}

std::string Rat::to_string() const {
  if (is_integer())
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool rational_sqrt(const Rat& x, Rat& root) {
  if (x.sign() < 0)
    return false;
  Int n = x.num(), d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rat(rn, rd);
  return true;
}

}  // namespace gspin

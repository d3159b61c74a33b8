#include "gspin/exact/affine.hpp"

namespace gspin {

std::string AffineExp::to_string() const {
  if (q.is_zero())
    return p.to_string();
  std::string s = p.is_zero() ? "" : p.to_string() + (q.sign() < 0 ? " - " : " + ");
  Rat a = p.is_zero() ? q : q.abs();
  if (a == Rat(1))
    return s + "s";
  if (a == Rat(-1))
    return s + "-s";
  return s + a.to_string() + "*s";
}

}  // namespace gspin

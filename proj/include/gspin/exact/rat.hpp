#ifndef GSPIN_EXACT_RAT_HPP
#define GSPIN_EXACT_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gspin {

using Int = mpz_class;

// Exact rational number, always kept in lowest terms with positive denominator.
class Rat {
public:
  Rat() : q_(0) { }
  Rat(int v) : q_(v) { }
  Rat(long v) : q_(v) { }
  Rat(long long v) : q_(static_cast<long>(v)) { }
  Rat(const Int& v) : q_(v) { }
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rat parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rat abs() const { return Rat(::abs(q_)); }
  Rat inverse() const;
  Rat pow(long e) const;

  std::string to_string() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
  mpq_class q_;
};

// Positive rational square root when it exists.
bool rational_sqrt(const Rat& x, Rat& root);

}  // namespace gspin

#endif

#include "gspin/root_data.hpp"

#include "gspin/exact/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gspin {

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::gspin_odd: return "gspin_odd";
    case GroupKind::spin_odd: return "spin_odd";
    case GroupKind::so_odd: return "so_odd";
    case GroupKind::gl: return "gl";
  }
  return "?";
}

std::int64_t pair(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pairing dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += x[i] * y[i];
  return s;
}

std::vector<std::vector<std::int64_t>> RootDatum::cartan() const {
  std::vector<std::vector<std::int64_t>> c(simple_roots.size(),
                                           std::vector<std::int64_t>(simple_coroots.size()));
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    for (std::size_t j = 0; j < simple_coroots.size(); ++j)
      c[i][j] = pair(simple_roots[i], simple_coroots[j]);
  return c;
}

namespace {

IntVec unit(std::size_t dim, std::size_t i, std::int64_t k = 1) {
  IntVec v(dim, 0);
  v[i] = k;
  return v;
}

RatVec unit_rat(std::size_t dim, std::size_t i) {
  RatVec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

std::vector<std::string> names(const std::string& stem, int from, int to, const std::string& suffix = "") {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i)
    out.push_back(stem + std::to_string(i) + suffix);
  return out;
}

}  // namespace

RootDatum build_root_datum(GroupKind kind, int n) {
  if (n < 1)
    throw std::invalid_argument("root datum rank must be at least 1");
  RootDatum d{kind, n, {}, {}, {}, {}, {}, {}};
  const auto un = static_cast<std::size_t>(n);
  switch (kind) {
    case GroupKind::gspin_odd: {
      d.char_basis = names("e", 0, n);
      d.cochar_basis = names("e", 0, n, "*");
      for (std::size_t i = 0; i <= un; ++i) {
        d.char_lattice.push_back(unit_rat(un + 1, i));
        d.cochar_lattice.push_back(unit_rat(un + 1, i));
      }
      for (std::size_t i = 1; i < un; ++i) {
        IntVec a = unit(un + 1, i), c = unit(un + 1, i);
        a[i + 1] = -1;
        c[i + 1] = -1;
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(c);
      }
      d.simple_roots.push_back(unit(un + 1, un));
      IntVec c = unit(un + 1, un, 2);
      c[0] = -1;
      d.simple_coroots.push_back(c);
      break;
    }
    case GroupKind::spin_odd:
    case GroupKind::so_odd: {
      d.char_basis = names("f", 1, n);
      d.cochar_basis = names("f", 1, n, "*");
      for (std::size_t i = 1; i < un; ++i) {
        IntVec a = unit(un, i - 1);
        a[i] = -1;
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(a);
      }
      d.simple_roots.push_back(unit(un, un - 1));
      d.simple_coroots.push_back(unit(un, un - 1, 2));
      if (kind == GroupKind::so_odd) {
        for (std::size_t i = 0; i < un; ++i) {
          d.char_lattice.push_back(unit_rat(un, i));
          d.cochar_lattice.push_back(unit_rat(un, i));
        }
      } else {
        // characters: f_1..f_{n-1} and (f_1+...+f_n)/2; cocharacters: the simple coroots
        for (std::size_t i = 0; i + 1 < un; ++i)
          d.char_lattice.push_back(unit_rat(un, i));
        d.char_lattice.push_back(RatVec(un, Rat(1, 2)));
        for (const auto& c : d.simple_coroots) {
          RatVec v;
          for (auto x : c)
            v.push_back(Rat(static_cast<long>(x)));
          d.cochar_lattice.push_back(v);
        }
      }
      break;
    }
    case GroupKind::gl: {
      d.char_basis = names("e", 1, n);
      d.cochar_basis = names("e", 1, n, "*");
      for (std::size_t i = 0; i < un; ++i) {
        d.char_lattice.push_back(unit_rat(un, i));
        d.cochar_lattice.push_back(unit_rat(un, i));
      }
      for (std::size_t i = 0; i + 1 < un; ++i) {
        IntVec a = unit(un, i);
        a[i + 1] = -1;
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(a);
      }
      break;
    }
  }
  return d;
}

std::vector<std::vector<std::int64_t>> standard_cartan(GroupKind kind, int n) {
  const int r = kind == GroupKind::gl ? n - 1 : n;
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    c[i][i] = 2;
    if (i + 1 < r) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  }
  if (kind != GroupKind::gl && n >= 2)
    c[n - 2][n - 1] = -2;
  return c;
}

LatticeMap LatticeMap::then(const LatticeMap& next) const {
  if (next.source != target)
    throw std::invalid_argument("lattice maps do not compose");
  return {source, next.target, next.matrix * matrix};
}

bool LatticeMap::injective() const { return rank(matrix) == matrix.cols(); }

SpinTorusEmbedding spin_torus_embedding(int n) {
  auto spin = build_root_datum(GroupKind::spin_odd, n);
  auto gspin = build_root_datum(GroupKind::gspin_odd, n);
  auto so = build_root_datum(GroupKind::so_odd, n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::string> beta = names("beta", 1, n, "^vee");

  Mat j(un + 1, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t r = 0; r <= un; ++r)
      j(r, i) = Rat(static_cast<long>(gspin.simple_coroots[i][r]));

  Mat pr(un, un + 1);
  for (std::size_t i = 0; i < un; ++i)
    pr(i, i + 1) = 1;

  Mat cov(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t r = 0; r < un; ++r)
      cov(r, i) = Rat(static_cast<long>(so.simple_coroots[i][r]));
  (void)spin;
  return {{beta, gspin.cochar_basis, j}, {gspin.cochar_basis, so.cochar_basis, pr}, {beta, so.cochar_basis, cov}};
}

PairingReport pairing_report(int n) {
  auto d = build_root_datum(GroupKind::gspin_odd, n);
  const auto un = static_cast<std::size_t>(n);
  RatVec rho(un + 1, Rat(n, 2)), alphahat(un + 1, Rat(1, 2));
  rho[0] = 0;
  alphahat[0] = 0;
  IntVec cochar(un + 1, 1);
  cochar[0] = 0;

  auto dot = [](const RatVec& x, const IntVec& y) {
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
      s += x[i] * Rat(static_cast<long>(y[i]));
    return s;
  };
  const IntVec& an = d.simple_roots.back();
  // invariant form: standard dot product on e_1..e_n, e_0 orthogonal to the roots
  Rat form_rho_an(0), form_an_an(0);
  for (std::size_t i = 1; i <= un; ++i) {
    form_rho_an += rho[i] * Rat(static_cast<long>(an[i]));
    form_an_an += Rat(static_cast<long>(an[i] * an[i]));
  }
  RatVec en(un + 1, Rat(0));
  en[un] = 1;
  RatVec two_rho = rho;
  for (auto& x : two_rho)
    x *= 2;
  return {2 * form_rho_an / form_an_an, dot(rho, d.simple_coroots.back()), dot(alphahat, cochar),
          dot(en, cochar), dot(two_rho, cochar)};
}

SignedPerm::SignedPerm(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (int x : image_) {
    int a = std::abs(x);
    if (a < 1 || a > static_cast<int>(image_.size()) || seen[a])
      throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[i] = i + 1;
  return SignedPerm(v);
}

SignedPerm SignedPerm::simple(int n, int i) {
  if (i < 1 || i > n)
    throw std::out_of_range("simple reflection index");
  auto v = identity(n).image_;
  if (i < n)
    std::swap(v[i - 1], v[i]);
  else
    v[n - 1] = -n;
  return SignedPerm(v);
}

IntVec SignedPerm::act(const IntVec& v) const {
  IntVec out(v.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    int t = image_[i];
    out[static_cast<std::size_t>(std::abs(t) - 1)] += (t > 0 ? 1 : -1) * v[i];
  }
  return out;
}

Mat SignedPerm::matrix() const {
  const std::size_t n = image_.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(static_cast<std::size_t>(std::abs(image_[i]) - 1), i) = image_[i] > 0 ? 1 : -1;
  return m;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> v(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    int t = image_[i];
    v[static_cast<std::size_t>(std::abs(t) - 1)] = (t > 0 ? 1 : -1) * static_cast<int>(i + 1);
  }
  return SignedPerm(v);
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("signed permutations of different rank");
  std::vector<int> v(b.image_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    int t = b.image_[i];
    int u = a.image_[static_cast<std::size_t>(std::abs(t) - 1)];
    v[i] = t > 0 ? u : -u;
  }
  return SignedPerm(v);
}

std::vector<IntVec> positive_roots_b(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<IntVec> roots;
  for (std::size_t i = 0; i < un; ++i) {
    roots.push_back(unit(un, i));
    for (std::size_t j = i + 1; j < un; ++j) {
      IntVec a = unit(un, i), b = unit(un, i);
      a[j] = -1;
      b[j] = 1;
      roots.push_back(a);
      roots.push_back(b);
    }
  }
  return roots;
}

namespace {

bool is_positive(const IntVec& v) {
  for (auto x : v)
    if (x != 0)
      return x > 0;
  return false;
}

}  // namespace

int SignedPerm::length() const {
  int l = 0;
  for (const auto& r : positive_roots_b(rank()))
    if (!is_positive(act(r)))
      ++l;
  return l;
}

SignedPerm weyl_w_h(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[i] = -(i + 1);
  return SignedPerm(v);
}

SignedPerm weyl_w_theta(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[i] = n - i;
  return SignedPerm(v);
}

SignedPerm word_product(int n, const std::vector<int>& word) {
  SignedPerm w = SignedPerm::identity(n);
  for (int s : word)
    w = w * SignedPerm::simple(n, s);
  return w;
}

std::vector<int> reduced_word_w_theta(int n) {
  std::vector<int> w;
  for (int start = n - 1; start >= 1; --start)
    for (int k = start; k <= n - 1; ++k)
      w.push_back(k);
  return w;
}

std::vector<int> reduced_word_w_h(int n) {
  std::vector<int> w = reduced_word_w_theta(n);
  for (int start = n; start >= 1; --start)
    for (int k = start; k <= n; ++k)
      w.push_back(k);
  return w;
}

WeylLengths weyl_lengths(int n) {
  auto wh = weyl_w_h(n), wt = weyl_w_theta(n);
  return {wh.length(), wt.length(), (wh * wt.inverse()).length()};
}

}  // namespace gspin

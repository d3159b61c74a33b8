#include "gspin/weyl_cells.hpp"

#include "gspin/error.hpp"
#include "gspin/exact/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gspin {

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Perm(v);
}

Perm Perm::simple(int n, int i) {
  auto v = identity(n).image_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Perm(v);
}

Perm Perm::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[i] = n - 1 - i;
  return Perm(v);
}

Perm Perm::inverse() const {
  std::vector<int> v(image_.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Perm(v);
}

int Perm::length() const {
  int l = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!keeps_positive(i, j))
        ++l;
  return l;
}

std::vector<int> Perm::reduced_word() const {
  // peel off right descents: w = w' s_i whenever w(i) > w(i+1)
  std::vector<int> word;
  Perm w = *this;
  for (;;) {
    int d = -1;
    for (int i = 0; i + 1 < size(); ++i)
      if (w(i) > w(i + 1)) {
        d = i;
        break;
      }
    if (d < 0)
      break;
    w = w * simple(size(), d + 1);
    word.push_back(d + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm operator*(const Perm& a, const Perm& b) {
  std::vector<int> v(b.image_.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.image_[static_cast<std::size_t>(b.image_[i])];
  return Perm(v);
}

Perm longest_of_levi(const Composition& blocks) {
  std::vector<int> v;
  int start = 0;
  for (int b : blocks) {
    for (int k = 0; k < b; ++k)
      v.push_back(start + b - 1 - k);
    start += b;
  }
  return Perm(v);
}

std::set<int> levi_simple_roots(const Composition& blocks) {
  std::set<int> s;
  int start = 0;
  for (int b : blocks) {
    for (int k = 1; k < b; ++k)
      s.insert(start + k);
    start += b;
  }
  return s;
}

Composition composition_of(int n, const std::set<int>& simple_roots) {
  Composition c;
  int len = 1;
  for (int i = 1; i < n; ++i) {
    if (simple_roots.count(i)) {
      ++len;
    } else {
      c.push_back(len);
      len = 1;
    }
  }
  c.push_back(len);
  return c;
}

namespace {

void check_rank(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("weyl_cells supports 1 <= n <= 8, got " + std::to_string(n));
}

std::set<int> theta_plus_of(const Perm& w) {
  std::set<int> s;
  for (int i = 1; i < w.size(); ++i)
    if (w.keeps_positive(i - 1, i))
      s.insert(i);
  return s;
}

bool satisfies_bessel_condition(const Perm& w) {
  for (int i = 1; i < w.size(); ++i)
    if (w.keeps_positive(i - 1, i) && w(i) != w(i - 1) + 1)
      return false;
  return true;
}

}  // namespace

BesselElt bessel_element(const Perm& w) {
  if (!satisfies_bessel_condition(w))
    throw std::invalid_argument("permutation is not in the Bessel set");
  auto theta = theta_plus_of(w);
  return {w, composition_of(w.size(), theta), theta};
}

std::vector<BesselElt> bessel_set(int n) {
  check_rank(n);
  std::vector<BesselElt> out;
  auto v = Perm::identity(n).image();
  do {
    Perm w(v);
    if (satisfies_bessel_condition(w))
      out.push_back(bessel_element(w));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Perm> bessel_set_by_levi(int n) {
  check_rank(n);
  std::vector<Perm> out;
  Perm wg = Perm::longest(n);
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::set<int> roots;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1)))
        roots.insert(i);
    out.push_back(wg * longest_of_levi(composition_of(n, roots)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Perm& v, const Perm& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("bruhat_leq size mismatch");
  // subword property: v <= w iff v is a product of a subword of a reduced word of w
  const int n = w.size();
  std::set<Perm> reach{Perm::identity(n)};
  for (int s : w.reduced_word()) {
    Perm r = Perm::simple(n, s);
    std::vector<Perm> fresh;
    for (const auto& x : reach)
      fresh.push_back(x * r);
    reach.insert(fresh.begin(), fresh.end());
  }
  return reach.count(v) > 0;
}

int bessel_distance(const Perm& w, const Perm& w_prime) {
  auto a = bessel_element(w), b = bessel_element(w_prime);
  if (!bruhat_leq(w_prime, w))
    throw VerificationError("bessel_distance", "order", "pair is not comparable with w' <= w");
  int d = 0;
  for (int r : b.theta_plus)
    if (!a.theta_plus.count(r))
      ++d;
  return d;
}

int longest_bessel_chain(const Perm& w, const Perm& w_prime) {
  if (!bruhat_leq(w_prime, w))
    throw VerificationError("longest_bessel_chain", "order", "pair is not comparable with w' <= w");
  std::vector<Perm> between;
  for (const auto& b : bessel_set(w.size()))
    if (bruhat_leq(w_prime, b.w) && bruhat_leq(b.w, w))
      between.push_back(b.w);
  std::sort(between.begin(), between.end(), [](const Perm& x, const Perm& y) {
    return x.length() != y.length() ? x.length() < y.length() : x < y;
  });
  std::vector<int> best(between.size(), -1);
  for (std::size_t k = 0; k < between.size(); ++k) {
    if (between[k] == w_prime)
      best[k] = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (best[j] >= 0 && !(between[j] == between[k]) && bruhat_leq(between[j], between[k]))
        best[k] = std::max(best[k], best[j] + 1);
  }
  for (std::size_t k = 0; k < between.size(); ++k)
    if (between[k] == w)
      return best[k];
  throw VerificationError("longest_bessel_chain", "search", "endpoint missing from B(G)");
}

USplitting u_splitting(const Perm& w) {
  USplitting s;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      (w.keeps_positive(i, j) ? s.plus : s.minus).push_back({i + 1, j + 1});
  return s;
}

namespace {

Mat block_indicators(int n, const Composition& c) {
  Mat m(static_cast<std::size_t>(n), c.size());
  int start = 0;
  for (std::size_t b = 0; b < c.size(); ++b) {
    for (int k = 0; k < c[b]; ++k)
      m(static_cast<std::size_t>(start + k), b) = 1;
    start += c[b];
  }
  return m;
}

TorusDesc describe(const Mat& columns) {
  return {rank(columns), columns};
}

Mat hconcat(const Mat& a, const Mat& b) {
  Mat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

}  // namespace

TransverseTorus transverse_torus(const Perm& w, const Perm& w_prime) {
  auto a = bessel_element(w), b = bessel_element(w_prime);
  const int n = w.size();
  Mat aw = block_indicators(n, a.levi);
  Mat awp = block_indicators(n, b.levi);
  // cocharacters of the derived group of M_{w'}: coordinates summing to zero on each block
  Mat sums = awp.transpose();
  Mat kernel = nullspace(sums * aw);
  Mat transverse = aw * kernel;
  TorusDesc t = describe(transverse);
  TorusDesc tw = describe(aw), twp = describe(awp);
  bool inside = rank(hconcat(aw, awp)) == tw.rank;
  bool splits = inside && rank(hconcat(transverse, awp)) == tw.rank && t.rank + twp.rank == tw.rank;
  return {tw, twp, t, splits};
}

}  // namespace gspin

#include "gspin/harness/harness.hpp"

#include "gspin/bruhat_engine.hpp"
#include "gspin/dual_side.hpp"
#include "gspin/error.hpp"
#include "gspin/exact/linalg.hpp"
#include "gspin/exact/padic.hpp"
#include "gspin/exact/random.hpp"
#include "gspin/mellin_ledger.hpp"
#include "gspin/orbit_measure.hpp"
#include "gspin/root_data.hpp"
#include "gspin/so_realization.hpp"
#include "gspin/weyl_cells.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace gspin::harness {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rootdata", "weyl", "so", "dual", "orbit", "measure", "bruhat", "mellin"};
  return names;
}

std::pair<int, int> suite_guard(const std::string& suite) {
  static const std::map<std::string, std::pair<int, int>> guards{
      {"rootdata", {1, 12}}, {"weyl", {1, 6}},    {"so", {1, 8}},      {"dual", {1, 6}},
      {"orbit", {1, 8}},     {"measure", {2, 10}}, {"bruhat", {1, 8}}, {"mellin", {2, 10}},
      {"all", {1, 12}}};
  auto it = guards.find(suite);
  if (it == guards.end())
    throw ConfigError("unknown suite '" + suite + "'");
  return it->second;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size())
      throw ConfigError("invalid n range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

void validate(const SuiteConfig& c) {
  auto [lo, hi] = suite_guard(c.suite);
  if (c.n_lo > c.n_hi)
    throw ConfigError("empty n range " + std::to_string(c.n_lo) + ".." + std::to_string(c.n_hi));
  if (c.n_lo < lo || c.n_hi > hi)
    throw ConfigError("n range " + std::to_string(c.n_lo) + ".." + std::to_string(c.n_hi) + " outside " +
                      std::to_string(lo) + ".." + std::to_string(hi) + " for suite " + c.suite);
  if (c.trials < 1)
    throw ConfigError("trials must be at least 1");
  if (c.prime < 2 || !is_prime(Int(c.prime)))
    throw ConfigError("prime " + std::to_string(c.prime) + " is not prime");
  if (c.symbolic_max_n < 0 || c.symbolic_max_n > 6)
    throw ConfigError("symbolic-max-n must lie in 0..6");
  if (!c.report_path.empty()) {
    std::ofstream probe(c.report_path, std::ios::app);
    if (!probe)
      throw ConfigError("cannot write report to '" + c.report_path + "'");
  }
}

int SuiteReport::total_failed() const {
  int f = 0;
  for (const auto& r : records)
    f += r.failed;
  return f;
}

namespace {

std::string ser(const RatVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].to_string();
  return s + "]";
}

std::string ser(const Mat& m) { return to_string(m); }
std::string ser(bool b) { return b ? "true" : "false"; }
std::string ser(const Rat& r) { return r.to_string(); }
std::string ser(long v) { return std::to_string(v); }

// Collects the checks of one trial.
class Trial {
public:
  Trial(std::uint64_t seed, std::vector<Failure>& sink) : seed_(seed), rng_(seed), sink_(sink) { }

  TrialRng& rng() { return rng_; }
  bool ok() const { return ok_; }

  void check(bool cond, const std::string& op, const std::string& inputs, const std::string& expected,
             const std::string& got) {
    if (cond)
      return;
    ok_ = false;
    sink_.push_back({op, inputs, expected, got, seed_});
  }

  template <class T>
  void equal(const T& got, const T& expected, const std::string& op, const std::string& inputs) {
    check(got == expected, op, inputs, ser(expected), ser(got));
  }

  void error(const std::string& op, const std::string& what) {
    ok_ = false;
    sink_.push_back({op, "", "no error", what, seed_});
  }

private:
  std::uint64_t seed_;
  TrialRng rng_;
  std::vector<Failure>& sink_;
  bool ok_ = true;
};

struct Context {
  const SuiteConfig& config;
  int n;
  std::size_t un;
  int trial;
  std::set<std::string>& findings;
  Json& facts;
};

Mat random_unipotent(TrialRng& rng, std::size_t n, std::int64_t bound = 50) {
  Mat u = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      u(i, j) = rng.any(bound);
  return u;
}

Mat random_invertible(TrialRng& rng, std::size_t n, std::int64_t bound = 20) {
  for (;;) {
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g(i, j) = rng.any(bound);
    if (!bareiss_det(g).is_zero())
      return g;
  }
}

Mat random_skew(TrialRng& rng, std::size_t n) {
  Mat z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      z(i, j) = rng.any();
      z(j, i) = -z(i, j);
    }
  return z;
}

Mat random_symmetric(TrialRng& rng, std::size_t n) {
  Mat y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      y(i, j) = rng.any(50);
      y(j, i) = y(i, j);
    }
  return y;
}

SignedPerm random_signed_perm(TrialRng& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(rng.uniform(0, i))]);
  for (auto& x : img)
    if (rng.uniform(0, 1))
      x = -x;
  return SignedPerm(img);
}

Perm random_perm(TrialRng& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(rng.uniform(0, i))]);
  return Perm(img);
}

// ---- rootdata

void rootdata_trial(Context& cx, Trial& t) {
  const int n = cx.n;
  if (cx.trial == 0) {
    for (auto kind : {GroupKind::gspin_odd, GroupKind::spin_odd, GroupKind::so_odd, GroupKind::gl}) {
      auto d = build_root_datum(kind, n);
      t.check(d.cartan() == standard_cartan(kind, n), "cartan", to_string(kind) + " n=" + std::to_string(n),
              "standard Cartan matrix", "mismatch");
    }
    auto pr = pairing_report(n);
    std::string in = "n=" + std::to_string(n);
    t.equal(pr.rho_alpha_n, Rat(n), "pairing <rho,alpha_n>", in);
    t.equal(pr.rho_alpha_n_coroot, Rat(n), "pairing <rho,alpha_n^vee>", in);
    t.equal(pr.alphahat_cochar, Rat(n, 2), "pairing <alphahat,alpha^vee>", in);
    t.equal(pr.t_exponent, Rat(n * n), "t exponent", in);

    auto len = weyl_lengths(n);
    t.equal(long(len.l_w_h), long(n * n), "length w_H", in);
    t.equal(long(len.l_w_theta), long(n * (n - 1) / 2), "length w_theta", in);
    t.equal(long(len.l_w0), long(len.l_w_h - len.l_w_theta), "length w0", in);
    auto wh = reduced_word_w_h(n), wt = reduced_word_w_theta(n);
    t.check(word_product(n, wh) == weyl_w_h(n), "reduced word w_H", in, "w_H", "different element");
    t.check(word_product(n, wt) == weyl_w_theta(n), "reduced word w_theta", in, "w_theta", "different element");
    t.equal(long(wh.size()), long(len.l_w_h), "reduced word length w_H", in);
    t.equal(long(wt.size()), long(len.l_w_theta), "reduced word length w_theta", in);

    for (int i = 1; i <= n; ++i) {
      IntVec e(static_cast<std::size_t>(n), 0), minus_e(static_cast<std::size_t>(n), 0),
          flip(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i - 1)] = 1;
      minus_e[static_cast<std::size_t>(i - 1)] = -1;
      flip[static_cast<std::size_t>(n - i)] = 1;
      t.check(weyl_w_h(n).act(e) == minus_e, "w_H action", in + " i=" + std::to_string(i), "-e_i", "other");
      t.check(weyl_w_theta(n).act(e) == flip, "w_theta action", in + " i=" + std::to_string(i), "e_{n+1-i}",
              "other");
    }
    auto emb = spin_torus_embedding(n);
    t.check(emb.j.then(emb.pr).matrix == emb.covering.matrix, "spin torus embedding", in, "pr o j = covering",
            ser(emb.j.then(emb.pr).matrix));
    t.check(emb.j.injective(), "spin torus embedding", in, "j injective", "not injective");
    cx.facts["lengths"] = {len.l_w_h, len.l_w_theta};
  }
  auto& rng = t.rng();
  SignedPerm x = random_signed_perm(rng, n), y = random_signed_perm(rng, n);
  std::string in = "x=" + ser(x.matrix()) + " y=" + ser(y.matrix());
  t.check((x * y).length() <= x.length() + y.length(), "length subadditive", in, "l(xy) <= l(x)+l(y)",
          std::to_string((x * y).length()));
  t.equal(long(x.inverse().length()), long(x.length()), "length inverse", in);
  t.check((x * y).matrix() == x.matrix() * y.matrix(), "signed perm product", in, "matrix product", "differs");
  int i = static_cast<int>(rng.uniform(1, n));
  int d = (x * SignedPerm::simple(n, i)).length() - x.length();
  t.check(d == 1 || d == -1, "length simple step", in + " i=" + std::to_string(i), "+-1", std::to_string(d));
}

// ---- weyl

void weyl_trial(Context& cx, Trial& t) {
  const int n = cx.n;
  std::string in = "n=" + std::to_string(n);
  auto bset = bessel_set(n);
  if (cx.trial == 0) {
    t.equal(long(bset.size()), long(1) << (n - 1), "bessel_set size", in);
    std::vector<Perm> a, b = bessel_set_by_levi(n);
    for (const auto& e : bset) {
      a.push_back(e.w);
      t.check(e.w == Perm::longest(n) * longest_of_levi(e.levi), "bessel_set w = w_G w_M",
              in + " w=" + ser(RatVec(e.w.image().begin(), e.w.image().end())), "w_G w_M", "differs");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    t.check(a == b, "bessel_set definitions", in, "same set", "different sets");
    for (const auto& w : bset)
      for (const auto& wp : bset) {
        if (!bruhat_leq(wp.w, w.w))
          continue;
        std::string pin = in + " w=" + ser(RatVec(w.w.image().begin(), w.w.image().end())) +
                          " w'=" + ser(RatVec(wp.w.image().begin(), wp.w.image().end()));
        if (n <= 5)
          t.equal(long(bessel_distance(w.w, wp.w)), long(longest_bessel_chain(w.w, wp.w)), "bessel_distance", pin);
        auto tt = transverse_torus(w.w, wp.w);
        t.check(tt.splits, "transverse_torus", pin, "rank split", "fails");
        if (w.w == wp.w)
          t.check(tt.transverse.finite(), "transverse_torus", pin, "finite", std::to_string(tt.transverse.rank));
      }
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
      Perm w(img);
      auto s = u_splitting(w);
      std::set<RootPair> all(s.plus.begin(), s.plus.end());
      all.insert(s.minus.begin(), s.minus.end());
      t.check(all.size() == s.plus.size() + s.minus.size() &&
                  all.size() == static_cast<std::size_t>(n * (n - 1) / 2),
              "u_splitting", in + " w=" + ser(RatVec(img.begin(), img.end())), "partition", "overlap or gap");
      t.equal(long(s.minus.size()), long(w.length()), "u_splitting minus size", in);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  auto& rng = t.rng();
  const auto& w = bset[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(bset.size()) - 1))].w;
  const auto& v = bset[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(bset.size()) - 1))].w;
  const auto& u = bset[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(bset.size()) - 1))].w;
  if (bruhat_leq(v, w) && bruhat_leq(u, v))
    t.equal(long(bessel_distance(w, u)), long(bessel_distance(w, v) + bessel_distance(v, u)),
            "bessel_distance additivity", in);
  Perm p = random_perm(rng, n);
  Perm q = Perm::identity(n);
  for (int letter : p.reduced_word())
    q = q * Perm::simple(n, letter);
  t.check(q == p, "reduced_word", in + " w=" + ser(RatVec(p.image().begin(), p.image().end())), "product = w",
          "differs");
}

// ---- so

void so_trial(Context& cx, Trial& t) {
  const std::size_t n = cx.un;
  std::string in = "n=" + std::to_string(n);
  auto reps = weyl_representatives(n);
  if (cx.trial == 0) {
    auto f = build_forms(n);
    t.check(f.transpose_sign_ok && f.square_ok && f.det_ok, "build_forms", in, "J' identities", "fail");
    t.check(in_so(reps.w_h) && in_so(reps.w_theta) && in_so(reps.w0), "weyl_representatives", in, "in SO",
            "not in SO");
    t.check(reps.w_h_action == weyl_w_h(cx.n), "w_H torus action", in, "e_i -> -e_i", "other");
    t.check(reps.w_theta_action == weyl_w_theta(cx.n), "w_theta torus action", in, "e_i -> e_{n+1-i}", "other");
    t.check(embed_levi(Rat(-1, 2) * Mat::identity(n)) * reps.w0_tilde_inv == reps.w0_inv, "w0 inverse", in,
            "m(-I/2) w~0^-1", ser(reps.w0_inv));
    if (cx.n <= cx.config.symbolic_max_n)
      t.check(psi_compat_symbolic(n), "psi_compat_symbolic", in, "true", "false");
    auto pin = reconstruct_w_h(n);
    if (!pin.found)
      cx.findings.insert("no sign choice in u(1) tu(y) u(1) over the reduced word reproduces w_H; "
                         "w_H^-1 times the all-plus product is " + ser(pin.ratio));
  }
  auto& rng = t.rng();
  Mat u = random_unipotent(rng, n);
  auto psi = psi_compat_check(u);
  t.check(psi.ok, "psi_compat_check", "u'=" + ser(u), ser(psi.psi_before), ser(psi.psi_after));

  Mat a = random_invertible(rng, n);
  Mat m = embed_levi(a);
  Mat c = reps.w0 * m * reps.w0_inv;
  t.check(in_so(m) && c.block(0, 0, n, n) == m.block(n + 1, n + 1, n, n) && c.block(n + 1, n + 1, n, n) == a &&
              c(n, n) == Rat(1),
          "w0 swaps Levi blocks", "A=" + ser(a), "diag(C,1,A)", ser(c));

  RatVec av = rng.nonzero_vector(n);
  Mat zt = canonical_rep(av);
  Mat h = embed_upper(zt.block(0, 0, n, n), zt.block(0, n, n, 1).col_vector(0));
  Mat u0 = random_unipotent(rng, n);
  Mat hp = embed_levi(u0) * h * inverse(embed_levi(u0));
  t.check(in_so(h) && in_so(hp), "embed_upper", "a=" + ser(av), "in SO", "not in SO");
  auto uc = upper_coords(hp);
  t.equal(reduce_orbit(skew_from(uc.z, uc.alpha)).a, av, "orbit invariants under Levi conjugation",
          "a=" + ser(av) + " u=" + ser(u0));

  RatVec ca = rng.nonzero_vector(n);
  Rat z0 = rng.nonzero(50);
  auto ci = cutoff_conj_identity(u0, y_matrix(ca), alpha_of(ca), z0);
  t.check(ci.ok && ci.members_in_so, "cutoff_conj_identity",
          "a=" + ser(ca) + " u0=" + ser(u0) + " z0=" + ser(z0), ser(ci.rhs), ser(ci.lhs));

  Mat xc = y_matrix(ca) * j_prime(n);
  long kappa = static_cast<long>(rng.uniform(-3, 3));
  Int p(cx.config.prime);
  bool expect = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      expect = expect && padic_val(xc(i, j), p).at_least(-static_cast<long>(i + j + 1) * kappa);
  t.equal(cutoff_phi(xc, kappa, p), expect, "cutoff_phi", "X=" + ser(xc) + " kappa=" + std::to_string(kappa));
}

// ---- dual

GSpElt random_levi_elt(TrialRng& rng, std::size_t n) { return levi_elt(random_invertible(rng, n), rng.nonzero(20)); }

void dual_trial(Context& cx, Trial& t) {
  const std::size_t n = cx.un;
  std::string in = "n=" + std::to_string(n);
  auto& rng = t.rng();

  std::vector<Rat> chi;
  for (std::size_t i = 0; i < n; ++i)
    chi.push_back(rng.nonzero(30));
  Rat a0 = rng.nonzero(30);
  auto m = levi_elt(Mat::diagonal(chi), a0);
  t.check(in_gsp(m.mat, m.similitude), "levi_elt", in, "in GSp", "not in GSp");
  Mat act = sym2_action_matrix(m);
  std::vector<Rat> eig;
  bool diagonal = true;
  for (std::size_t i = 0; i < act.rows(); ++i)
    for (std::size_t j = 0; j < act.cols(); ++j) {
      if (i == j)
        eig.push_back(act(i, i));
      else if (!act(i, j).is_zero())
        diagonal = false;
    }
  auto sat = sym2_satake(chi, a0.inverse());
  auto expected = sat.eigenvalues;
  std::sort(eig.begin(), eig.end());
  std::sort(expected.begin(), expected.end());
  std::string cin = "chi=" + ser(chi) + " a0=" + ser(a0);
  t.check(diagonal && eig == expected, "Ad eigenvalues vs Satake", cin, ser(expected), ser(eig));
  t.equal(long(sat.l_poly.size()) - 1, long(n * (n + 1) / 2), "L-polynomial degree", cin);
  t.equal(sat.l_poly.front(), Rat(1), "L-polynomial constant term", cin);

  auto m1 = random_levi_elt(rng, n), m2 = random_levi_elt(rng, n);
  Mat y = random_symmetric(rng, n);
  GSpElt m12{m1.mat * m2.mat, m1.similitude * m2.similitude};
  std::string ain = "m1=" + ser(m1.mat) + " m2=" + ser(m2.mat) + " Y=" + ser(y);
  t.check(adjoint_action(m12, y) == adjoint_action(m1, adjoint_action(m2, y)), "Ad group action", ain,
          "Ad(m1 m2) = Ad(m1) Ad(m2)", "differs");
  Mat g1 = m1.mat.block(0, 0, n, n);
  Mat cf = adjoint_closed_form(g1, m1.similitude, y);
  t.check(adjoint_action(m1, y) == cf, "Ad closed form", ain, ser(cf), ser(adjoint_action(m1, y)));
  t.check(in_gsp_lie(nilpotent_of(y)), "nilpotent_of", ain, "in Lie algebra", "not in Lie algebra");

  if (n >= 2) {
    std::size_t n1 = n / 2, n2 = n - n1;
    Mat h1 = random_invertible(rng, n1), h2 = random_invertible(rng, n2);
    auto lb = levi_restriction_blocks(n1, n2, h1, h2, rng.nonzero(20));
    t.check(lb.invariant, "levi_restriction_blocks", "n1=" + std::to_string(n1) + " g1=" + ser(h1) + " g2=" + ser(h2),
            "invariant", "not invariant");
    t.equal(long(lb.dim_y1 + lb.dim_y2 + lb.dim_y4), long(n * (n + 1) / 2), "levi_restriction_blocks dims", in);
  }
}

// ---- orbit

Mat random_generic_skew(TrialRng& rng, std::size_t size, OrbitReduction& out) {
  for (;;) {
    Mat z = random_skew(rng, size);
    try {
      out = reduce_orbit(z);
      return z;
    } catch (const VerificationError&) {
      // degenerate pivot: resample
    }
  }
}

void orbit_trial(Context& cx, Trial& t) {
  const std::size_t n = cx.un;
  auto& rng = t.rng();
  if (cx.trial == 0) {
    auto r = reduce_orbit(Mat{{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}});
    t.check(r.a == RatVec{1, 3} && r.u == Mat{{1, Rat(-2, 3)}, {0, 1}}, "reduce_orbit example", "[[0,1,2],[-1,0,3],[-2,-3,0]]",
            "u=[[1,-2/3],[0,1]] a=[1,3]", ser(r.u) + " " + ser(r.a));
  }
  OrbitReduction red;
  Mat z = random_generic_skew(rng, n + 1, red);
  std::string in = "Z=" + ser(z);
  t.check(act_on_skew(red.u, z) == canonical_rep(red.a), "reduce_orbit round trip", in, ser(canonical_rep(red.a)),
          ser(act_on_skew(red.u, z)));
  bool unipotent = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      unipotent = unipotent && red.u(i, j) == Rat(i == j ? 1 : 0);
  t.check(unipotent, "reduce_orbit unipotent", in, "upper unipotent u", ser(red.u));
  Mat u0 = random_unipotent(rng, n);
  auto again = reduce_orbit(act_on_skew(u0, z));
  t.equal(again.a, red.a, "reduce_orbit equivariance", in + " u0=" + ser(u0));
  if (n <= 4) {
    auto same = orbit_uniqueness_check(red.a, red.a);
    t.check(same.same_orbit && same.conjugator == Mat::identity(n), "orbit_uniqueness_check", "a=" + ser(red.a),
            "same orbit via identity", ser(same.conjugator));
    RatVec other = red.a;
    other[rng.uniform(0, static_cast<std::int64_t>(n) - 1)] += 1;
    bool zero = std::any_of(other.begin(), other.end(), [](const Rat& x) { return x.is_zero(); });
    if (!zero)
      t.check(!orbit_uniqueness_check(red.a, other).same_orbit, "orbit_uniqueness_check",
              "a=" + ser(red.a) + " a'=" + ser(other), "different orbits", "same orbit");
  }
}

// ---- measure

void measure_trial(Context& cx, Trial& t) {
  const std::size_t n = cx.un;
  std::string in = "n=" + std::to_string(n);
  if (cx.trial == 0) {
    auto q = quotient_measure_exponents(n);
    std::vector<Rat> k;
    for (std::size_t i = 0; i + 1 < n; ++i)
      k.push_back(Rat(static_cast<long>(i)));
    t.equal(q.k, k, "quotient exponents", in);
    t.equal(q.residue, Rat(0), "quotient residue", in);
    t.equal(q.t_exponent, Rat(static_cast<long>(n * n) - 1), "quotient t exponent", in);
    t.check(q.unique, "quotient exponents unique", in, "unique", "not unique");
    if (cx.n <= std::min(3, cx.config.symbolic_max_n)) {
      auto s = measure_jacobian_symbolic(n);
      t.check(s.sign != 0, "measure_jacobian_symbolic", in, "+-" + s.expected.to_string(), s.jacobian.to_string());
    }
    cx.facts["quotient_exponents"] = Json::array();
    for (const auto& x : q.k)
      cx.facts["quotient_exponents"].push_back(x.to_string());
  }
  if (n <= 6) {
    auto r = measure_jacobian_random(n, t.rng(), 1);
    t.check(r.ok, "measure_jacobian_random", in, "+-prod a_i^(i-1)",
            r.failures.empty() ? "mismatch" : "a=" + ser(r.failures.front()));
  }
}

// ---- bruhat

void bruhat_trial(Context& cx, Trial& t) {
  const std::size_t n = cx.un;
  auto& rng = t.rng();
  RatVec a = rng.nonzero_vector(n);
  std::string in = "a=" + ser(a);

  cx.findings.insert("a(g) is taken as the positive square root of det(g)^-1; the displayed (1/2)^(n/2)/prod_{k odd} a_k "
                     "squares to det(g) instead");
  try {
    auto p = decompose_w0n(a, false);
    for (const auto& [name, ok] : p.conditions) {
      if (ok)
        continue;
      if (name == "(3)" && n % 2 == 0)
        cx.findings.insert("listed condition (3) g~ Y' = I fails for even n; the top-right block of the product "
                           "gives g~ Y' = (-1)^(n-1) I, so Y' = (-1)^(n-1) J' tX J'^-1");
      else
        t.check(false, "decompose_w0n condition " + name, in, "true", "false");
    }
    Mat y = y_matrix(a);
    Mat al = Mat::column(p.alpha);
    t.equal((al.transpose() * inverse(y) * al)(0, 0), Rat(n % 2 == 0 ? 0 : -2), "t(alpha) Y^-1 alpha", in);
    t.equal(bareiss_det(y), y_det_closed_form(a), "det Y closed form", in);
    t.equal(bareiss_det(y.block(0, 0, n - 1, n - 1)), y_minor_closed_form(a), "leading minor of Y", in);
    Rat disp = a_of_g_displayed(a);
    t.equal(disp * disp, det_g_closed_form(a), "displayed a(g) squared", in);
  } catch (const VerificationError& e) {
    t.error("decompose_w0n " + e.where(), e.what());
  }

  auto u = u_alpha_n(a);
  t.equal(u.direct, u.closed_form, "u_n", in);
  t.equal(u.adjugate_nn, u.adjugate_expected, "u_n adjugate", in);
  t.check(u.upper_shape, "u_n conjugate shape", in, "upper", "other");

  auto tc = torus_coordinates(a);
  t.check(tc.products_ok, "d_i d_{i+1}", in, "1/(4 a_i^2)", ser(tc.d));
  t.check(tc.det_ok, "prod d_i", in, "det g", ser(tc.d));
  t.equal(tc.d.front(), tc.d1_factorized, "d_1", in);
  t.equal(tc.d.back(), tc.dn_factorized, "d_n", in);
  if (!(tc.d.front() == tc.d1_closed_form) || !(tc.d.back() == tc.dn_closed_form))
    cx.findings.insert("for even n the factorization gives d_1 = prod_{even} a_j^2 / (4 prod_{odd} a_k^2) and "
                       "d_n = 1/a_n^2, not prod_{even}/prod_{odd} and 1/(4 a_n^2)");
  Rat tt = rng.nonzero(30);
  RatVec scaled = a;
  for (std::size_t i = 0; i + 1 < n; ++i)
    scaled[i] *= tt * tt;
  scaled[n - 1] *= tt;
  auto ts = torus_coordinates(scaled);
  RatVec expect;
  for (const auto& d : tc.d)
    expect.push_back(d / (tt * tt));
  t.equal(ts.d, expect, "Z0 scaling of d", in + " t=" + ser(tt));

  Mat x = y_matrix(a) * j_prime(n);
  auto rc = reduction_claims(x, alpha_of(a));
  t.check(rc.c2 == rc.c4 && (!(rc.side_i && rc.side_ii) || rc.c4_prime), "reduction claims canonical", in,
          "(2)<=>(4), (i)&(ii)=>(4')", "violated");
  Mat xr = random_invertible(rng, n);
  RatVec ar = rng.nonzero_vector(n, 50);
  auto rr = reduction_claims(xr, ar);
  t.check(rr.c2 == rr.c4 && rr.c4 == rr.c4_prime, "reduction claims generic", "X=" + ser(xr) + " alpha=" + ser(ar),
          "(2)<=>(4')<=>(4)", ser(rr.c2) + ser(rr.c4_prime) + ser(rr.c4));
  Mat s = n % 2 == 0 ? random_skew(rng, n) : random_symmetric(rng, n);
  Mat xf = j_prime(n) * s;
  if (!bareiss_det(xf).is_zero()) {
    auto rf = reduction_claims(xf, ar);
    t.check(rf.c4_prime && rf.c2 == rf.c4, "reduction claims on (4') family", "X=" + ser(xf) + " alpha=" + ser(ar),
            "(4') and (2)<=>(4)", ser(rf.c2) + ser(rf.c4_prime) + ser(rf.c4));
  }

  if (cx.trial == 0) {
    auto bc = gl_big_cell(Mat{{1, 1}, {1, 2}});
    t.check(bc.u1 == Mat{{1, 1}, {0, 1}} && bc.d == RatVec{-1, -1} && bc.u2 == Mat{{1, 2}, {0, 1}}, "gl_big_cell",
            "[[1,1],[1,2]]", "u1=[[1,1],[0,1]] d=[-1,-1] u2=[[1,2],[0,1]]", ser(bc.u1) + ser(bc.d) + ser(bc.u2));
    if (cx.n <= std::min(3, cx.config.symbolic_max_n))
      t.check(twisted_centralizer_symbolic(n).trivial, "twisted_centralizer_symbolic", "n=" + std::to_string(n),
              "trivial", "nontrivial");
  }
  if (n >= 2) {
    auto tw = twisted_centralizer_random(a, rng, 10);
    t.check(tw.trivial, "twisted_centralizer_random", in, "no nontrivial member", "member found");
  }
}

// ---- mellin

Json ledger_json(const DLedger& led) {
  Json j = Json::object();
  auto put = [&](const std::string& name, const AffineExp& e) { j[name] = {{"p", e.p.to_string()}, {"q", e.q.to_string()}}; };
  put("nu", led.nu);
  put("center", led.center);
  for (std::size_t i = 0; i < led.tau.size(); ++i)
    put("tau" + std::to_string(i + 2), led.tau[i]);
  return j;
}

ExpVector random_exp_vector(TrialRng& rng, std::size_t n) {
  ExpVector v;
  for (std::size_t i = 1; i <= n; ++i)
    v.add(a_var(i), {rng.any(20), rng.any(20)});
  v.add(kDetY, {rng.any(20), rng.any(20)});
  v.add(kHalf, {rng.any(20), rng.any(20)});
  return v;
}

void mellin_trial(Context& cx, Trial& t) {
  const std::size_t n = cx.un;
  std::string in = "n=" + std::to_string(n);
  auto& rng = t.rng();
  auto fac = d_substitution(n, SubstitutionRules::factorized);
  auto lst = d_substitution(n, SubstitutionRules::listed);
  if (cx.trial == 0) {
    t.check(fac.tau == lst.tau && fac.center == lst.center, "tau independent of the 1/2 rules", in, "equal", "differ");
    auto slice = s0_slice(n);
    t.check(slice.ok, "s = 0 slice vs measure ledger", in, ser(slice.measure), ser(slice.integrand));
    if (!lst.nu_matches || !fac.nu_matches)
      cx.findings.insert("nu(n,s) differs from n(n-s)/2 + n(n+/-1)/2 - ns - 1: the listed substitution gives " +
                         lst.nu.to_string() + " and the factorized substitution gives " + fac.nu.to_string() +
                         " against " + fac.nu_closed_form.to_string() + " at n=" + std::to_string(n));
    cx.facts["ledger"] = ledger_json(fac);
  }
  auto v1 = random_exp_vector(rng, n), v2 = random_exp_vector(rng, n);
  t.check(substitute(v1 + v2, n, SubstitutionRules::factorized) ==
              substitute(v1, n, SubstitutionRules::factorized) + substitute(v2, n, SubstitutionRules::factorized),
          "d_substitution linear", in, "additive", "not additive");

  for (long p : {2L, cx.config.prime}) {
    for (const auto& c : valuation_oracle(fac, rng, Int(p), 1))
      t.check(c.ok, "valuation oracle p=" + std::to_string(p), "a=" + ser(c.a) + " s=" + ser(c.s), ser(c.original),
              ser(c.d_form));
  }
  for (const auto& c : valuation_oracle(lst, rng, Int(2), 1))
    if (!c.ok)
      cx.findings.insert("with a_n^2 = 1/(4 d_n) for even n and |det Y| = |d_1...d_n|^-1 the 2-adic valuations of "
                         "the integrand and its d-form disagree; det Y = (-1/2)^n/(d_1...d_n) and a_n^2 = 1/d_n restore "
                         "agreement");

  RatVec a = rng.nonzero_vector(n);
  auto om = omega_argument_check(a);
  t.equal(om.constant, Rat(1, 4), "omega argument constant", "a=" + ser(a));
  if (!om.holds)
    cx.findings.insert("det(Y)^2 prod a_i^-2 equals 1/(4 d_1), not 4^(n+1)/d_1 (n even) or 4^n/d_1 (n odd)");
}

using TrialFn = std::function<void(Context&, Trial&)>;

const std::map<std::string, TrialFn>& trial_functions() {
  static const std::map<std::string, TrialFn> fns{
      {"rootdata", rootdata_trial}, {"weyl", weyl_trial},       {"so", so_trial},         {"dual", dual_trial},
      {"orbit", orbit_trial},       {"measure", measure_trial}, {"bruhat", bruhat_trial}, {"mellin", mellin_trial}};
  return fns;
}

}  // namespace

SuiteRecord run_suite(const std::string& suite, int n, const SuiteConfig& config) {
  const auto& fn = trial_functions().at(suite);
  auto start = std::chrono::steady_clock::now();
  SuiteRecord rec;
  rec.suite = suite;
  rec.n = n;
  rec.trials = config.trials;
  std::set<std::string> findings;
  for (int k = 0; k < config.trials; ++k) {
    std::uint64_t seed = trial_seed(config.seed, suite, n, k);
    Trial trial(seed, rec.failures);
    Context cx{config, n, static_cast<std::size_t>(n), k, findings, rec.facts};
    try {
      fn(cx, trial);
    } catch (const VerificationError& e) {
      trial.error(e.operation() + " " + e.where(), e.what());
    } catch (const std::exception& e) {
      trial.error(suite, e.what());
    }
    (trial.ok() ? rec.passed : rec.failed)++;
  }
  rec.findings.assign(findings.begin(), findings.end());
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SuiteReport run(const SuiteConfig& config) {
  validate(config);
  SuiteReport report{config, {}};
  std::vector<std::string> suites = config.suite == "all" ? suite_names() : std::vector<std::string>{config.suite};
  for (const auto& s : suites) {
    auto [lo, hi] = suite_guard(s);
    for (int n = std::max(lo, config.n_lo); n <= std::min(hi, config.n_hi); ++n)
      report.records.push_back(run_suite(s, n, config));
  }
  return report;
}

Json to_json(const SuiteReport& report, bool with_wall_time) {
  const auto& c = report.config;
  Json j;
  j["schema"] = 1;
  j["config"] = {{"suite", c.suite},
                 {"n_range", std::to_string(c.n_lo) + ".." + std::to_string(c.n_hi)},
                 {"prime", c.prime},
                 {"trials", c.trials},
                 {"seed", c.seed},
                 {"symbolic_max_n", c.symbolic_max_n},
                 {"sign_convention", "a(g) > 0"}};
  j["records"] = Json::array();
  for (const auto& r : report.records) {
    Json rec;
    rec["suite"] = r.suite;
    rec["n"] = r.n;
    rec["trials"] = r.trials;
    rec["passed"] = r.passed;
    rec["failed"] = r.failed;
    rec["failures"] = Json::array();
    for (const auto& f : r.failures)
      rec["failures"].push_back(
          {{"operation", f.operation}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}, {"seed", f.seed}});
    rec["findings"] = r.findings;
    rec["facts"] = r.facts;
    if (with_wall_time)
      rec["wall_time"] = r.wall_time;
    j["records"].push_back(rec);
  }
  j["total_failed"] = report.total_failed();
  return j;
}

void write_report(const SuiteReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw ConfigError("cannot write report to '" + path + "'");
  out << to_json(report).dump(2) << '\n';
  if (!out)
    throw ConfigError("failed writing report to '" + path + "'");
}

}  // namespace gspin::harness

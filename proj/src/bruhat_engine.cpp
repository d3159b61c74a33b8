#include "gspin/bruhat_engine.hpp"

#include "gspin/error.hpp"
#include "gspin/exact/linalg.hpp"
#include "gspin/so_realization.hpp"

#include <functional>
#include <stdexcept>

namespace gspin {

namespace {

Rat sign_pow(std::size_t k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }

void require_generic(const RatVec& a, const char* op) {
  if (a.empty())
    throw std::invalid_argument(std::string(op) + ": need n >= 1");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_zero())
      throw std::invalid_argument(std::string(op) + ": a_" + std::to_string(i + 1) + " is zero");
}

Rat prod_odd_squares(const RatVec& a, std::size_t skip_from) {
  Rat p(1);
  for (std::size_t k = 0; k < a.size() && k < skip_from; k += 2)
    p *= a[k] * a[k];
  return p;
}

}  // namespace

Mat y_matrix(const RatVec& a) {
  require_generic(a, "y_matrix");
  const std::size_t n = a.size();
  Mat y(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    y(i, i + 1) = a[i];
    y(i + 1, i) = -a[i];
  }
  y(n - 1, n - 1) = Rat(-1, 2) * a[n - 1] * a[n - 1];
  return y;
}

RatVec alpha_of(const RatVec& a) {
  RatVec v(a.size(), Rat(0));
  v.back() = a.back();
  return v;
}

Rat y_det_closed_form(const RatVec& a) {
  Rat p = prod_odd_squares(a, a.size());
  return a.size() % 2 == 1 ? Rat(-1, 2) * p : p;
}

Rat y_minor_closed_form(const RatVec& a) {
  const std::size_t n = a.size();
  if (n % 2 == 0)
    return Rat(0);
  return prod_odd_squares(a, n - 1);
}

Mat n_prime_block_listed(const Mat& x) {
  Mat jp = j_prime(x.rows());
  return jp * x.transpose() * inverse(jp);
}

Mat n_prime_block(const Mat& x) { return sign_pow(x.rows() - 1) * n_prime_block_listed(x); }

ConditionList bruhat_conditions(const Mat& x, const RatVec& alpha, const Mat& y_prime) {
  const std::size_t n = alpha.size();
  Mat jp = j_prime(n), jpt = jp.transpose(), jp_inv = inverse(jp);
  Mat x_inv = inverse(x);
  Mat al = Mat::column(alpha);
  Rat sn = sign_pow(n), sn1 = sign_pow(n - 1);
  Mat id = Mat::identity(n);

  Mat g = jp * x_inv.transpose() * jp_inv;
  Mat beta = sn * al;
  const Mat& y_p = y_prime;
  Mat z_p = jpt * x_inv * jp_inv;
  Mat gamma_p = -(jpt * x_inv * al);
  Mat gt_inv = inverse(g).transpose();

  ConditionList c;
  c.emplace_back("(1)", (id - sn * beta * gamma_p.transpose() + y_p * jpt * z_p * jpt).is_zero());
  c.emplace_back("(2)", (beta + sn * (y_p * jpt * gamma_p)).is_zero());
  c.emplace_back("(3)", g * y_p == id);
  c.emplace_back("(3*)", g * y_p == sn1 * id);
  c.emplace_back("(4)", (sn1 * gamma_p.transpose() - beta.transpose() * z_p * jpt).is_zero());
  c.emplace_back("(5)", Rat(1) - sn * (beta.transpose() * gamma_p)(0, 0) == sn);
  c.emplace_back("(6)", sn1 * (al.transpose() * jp) == -(beta.transpose() * jp));
  c.emplace_back("(7)", sn1 * (jp * gt_inv * z_p * jpt) == id);
  c.emplace_back("(8)", -(jp * gt_inv * gamma_p) == al);
  c.emplace_back("(9)", jp * gt_inv * jp_inv == x);
  c.emplace_back("(i)", (x * jpt + jp * x.transpose() + al * al.transpose()).is_zero());
  c.emplace_back("(ii)", (al.transpose() * jpt * x_inv * al)(0, 0) == sn - 1);
  c.emplace_back("(iii)", (id + al * al.transpose() * x_inv.transpose() * jp + jp * x.transpose() * jp * x_inv).is_zero());
  return c;
}

namespace {

bool condition(const ConditionList& c, const std::string& name) {
  for (const auto& [k, v] : c)
    if (k == name)
      return v;
  throw std::logic_error("unknown condition " + name);
}

}  // namespace

ReductionClaims reduction_claims(const Mat& x, const RatVec& alpha) {
  const std::size_t n = alpha.size();
  Mat jp = j_prime(n), jpt = jp.transpose();
  Mat x_inv = inverse(x);
  Mat al = Mat::column(alpha);
  bool c4p = ((jpt * x - sign_pow(n - 1) * (x.transpose() * jp)) * x_inv * al).is_zero();
  auto c = bruhat_conditions(x, alpha, n_prime_block(x));
  return {condition(c, "(2)"), c4p, condition(c, "(4)"), condition(c, "(i)"), condition(c, "(ii)")};
}

BruhatParts decompose_w0n(const RatVec& a, bool strict) {
  require_generic(a, "decompose_w0n");
  const std::size_t n = a.size();
  Mat jp = j_prime(n);
  Mat y = y_matrix(a);
  RatVec alpha = alpha_of(a);
  Mat x = y * jp;

  BruhatParts p;
  p.x = x;
  p.alpha = alpha;
  p.g_tilde = jp * inverse(y).transpose();
  p.g = Rat(-1, 2) * p.g_tilde;
  for (const auto& v : alpha)
    p.beta.push_back(sign_pow(n) * v);
  p.y_prime = n_prime_block(x);
  p.x_tilde = inverse(x);
  p.n_elt = embed_upper_x(x, alpha);
  p.m = embed_levi(p.g);
  p.n_prime = embed_upper_x(p.y_prime, p.beta);
  p.n_bar = embed_lower(p.x_tilde, alpha);
  p.a_g = a_of_g(a);
  p.conditions = bruhat_conditions(x, alpha, p.y_prime);

  if (!in_so(p.n_elt) || !n_constraint_holds(x, alpha))
    throw VerificationError("decompose_w0n", "n", "element is not in the unipotent radical");
  if (!in_so(p.n_prime) || !n_constraint_holds(p.y_prime, p.beta))
    throw VerificationError("decompose_w0n", "n'", "element is not in the unipotent radical");
  if (!in_so(p.n_bar))
    throw VerificationError("decompose_w0n", "nbar", "element is not in SO");
  auto reps = weyl_representatives(n);
  if (!(reps.w0_inv * p.n_elt == p.m * p.n_prime * p.n_bar))
    throw VerificationError("decompose_w0n", "product", "w0^-1 n differs from m n' nbar");
  if (!(reps.w0_tilde_inv * p.n_elt == embed_levi(p.g_tilde) * p.n_prime * p.n_bar))
    throw VerificationError("decompose_w0n", "product~", "sign-free factorization fails");
  Rat dg = bareiss_det(p.g);
  if (!(dg == det_g_closed_form(a)) || !(dg * p.a_g * p.a_g == Rat(1)))
    throw VerificationError("decompose_w0n", "a(g)", "det(g) a(g)^2 != 1");
  if (strict)
    for (const auto& [name, ok] : p.conditions)
      if (!ok)
        throw VerificationError("decompose_w0n", name, "condition fails");
  return p;
}

Rat det_g_closed_form(const RatVec& a) {
  const std::size_t n = a.size();
  Rat p = prod_odd_squares(a, n);
  return n % 2 == 0 ? Rat(-1, 2).pow(static_cast<long>(n)) / p : Rat(-1, 2).pow(static_cast<long>(n - 1)) / p;
}

Rat a_of_g(const RatVec& a) {
  require_generic(a, "a_of_g");
  Rat root;
  if (!rational_sqrt(det_g_closed_form(a).inverse(), root))
    throw std::logic_error("det(g)^-1 is not a rational square");
  return root;
}

Rat a_of_g_displayed(const RatVec& a) {
  const std::size_t n = a.size();
  Rat p(1);
  for (std::size_t k = 0; k < n; k += 2)
    p *= a[k];
  long half = static_cast<long>(n % 2 == 0 ? n / 2 : (n - 1) / 2);
  return Rat(1, 2).pow(half) / p;
}

UAlpha u_alpha_n(const RatVec& a) {
  require_generic(a, "u_alpha_n");
  const std::size_t n = a.size();
  auto reps = weyl_representatives(n);
  Mat y = y_matrix(a);
  Mat x = y * j_prime(n);
  Mat nbar = embed_lower(inverse(x), alpha_of(a));
  Mat conj = reps.w0 * nbar * reps.w0_inv;
  bool upper = true;
  for (std::size_t i = 0; i < conj.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(conj(i, j) == Rat(i == j ? 1 : 0)))
        upper = false;
  Rat prod(1), prod_head(1);
  for (std::size_t i = 0; i < n; ++i) {
    prod *= a[i];
    if (i + 1 < n)
      prod_head *= a[i];
  }
  Rat closed = Rat(1, 2) * bareiss_det(y).inverse() * prod;
  Rat adj = adjugate(x)(n - 1, n - 1);
  return {conj(n - 1, n), closed, adj, sign_pow(n - 1) * prod_head, upper};
}

BigCell gl_big_cell(const Mat& g) {
  if (!g.square())
    throw std::invalid_argument("gl_big_cell needs a square matrix");
  const std::size_t n = g.rows();
  Mat jp = j_prime(n);
  Mat a = inverse(jp) * g;
  // a = L D U with unit triangular L, U
  Mat l = Mat::identity(n), u = Mat::identity(n);
  RatVec d(n);
  Mat work = a;
  for (std::size_t k = 0; k < n; ++k) {
    if (work(k, k).is_zero())
      throw VerificationError("gl_big_cell", "minor " + std::to_string(k + 1),
                              "lower-left corner minor vanishes");
    d[k] = work(k, k);
    for (std::size_t j = k + 1; j < n; ++j)
      u(k, j) = work(k, j) / d[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      l(i, k) = work(i, k) / d[k];
      for (std::size_t j = k + 1; j < n; ++j)
        work(i, j) -= l(i, k) * d[k] * u(k, j);
    }
  }
  Mat u1 = jp * l * inverse(jp);
  return {u1, d, u};
}

TorusCoords torus_coordinates(const RatVec& a) {
  require_generic(a, "torus_coordinates");
  const std::size_t n = a.size();
  auto parts = gl_big_cell(Rat(-1, 2) * (j_prime(n) * inverse(y_matrix(a)).transpose()));
  Rat even(1), odd(1);
  for (std::size_t k = 0; k < n; ++k)
    (k % 2 == 1 ? even : odd) *= a[k] * a[k];
  Rat an2 = a[n - 1] * a[n - 1];
  Rat four_even = n % 2 == 0 ? Rat(4) : Rat(1);
  TorusCoords t{parts.d,        even / odd,      n % 2 == 0 ? (4 * an2).inverse() : an2.inverse(),
                even / (four_even * odd), an2.inverse(), true, true};
  Rat prod(1);
  for (const auto& x : t.d)
    prod *= x;
  t.det_ok = prod == det_g_closed_form(a);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(t.d[i] * t.d[i + 1] == (4 * a[i] * a[i]).inverse()))
      t.products_ok = false;
  return t;
}

bool in_twisted_centralizer(const Mat& u, const Mat& g) {
  Mat s = inverse(j_prime(g.rows())) * g;
  return u.transpose() * s * u == s;
}

TwistedSymbolic twisted_centralizer_symbolic(std::size_t n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("symbolic twisted centralizer supports n <= 3");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("a" + std::to_string(i + 1));
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      names.push_back("u" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      where.emplace_back(i, j);
    }
  auto vars = MPoly::variables(names);
  PolyMat y(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    y(i, i + 1) = vars[i];
    y(i + 1, i) = -vars[i];
  }
  y(n - 1, n - 1) = MPoly(Rat(-1, 2)) * vars[n - 1] * vars[n - 1];
  // J'^-1 g is a nonzero multiple of t(adj Y), so the predicate can use the adjugate
  PolyMat s = adjugate(y).transpose();
  PolyMat u = PolyMat::identity(n);
  for (std::size_t k = 0; k < where.size(); ++k)
    u(where[k].first, where[k].second) = vars[n + k];
  PolyMat eqs = u.transpose() * s * u - s;

  TwistedSymbolic out{true, {}};
  // columns of u in order: once earlier columns are standard, the equations are linear in the next one
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<std::size_t> unknown;
    for (std::size_t k = 0; k < where.size(); ++k)
      if (where[k].second == col)
        unknown.push_back(n + k);
    std::vector<std::vector<MPoly>> rows;
    for (const auto& e : eqs.data()) {
      if (e.is_zero())
        continue;
      bool linear = true;
      std::vector<MPoly> coeffs;
      MPoly rest = e;
      for (auto v : unknown) {
        if (rest.degree_in(v) > 1)
          linear = false;
        coeffs.push_back(rest.coefficient(v, 1));
        rest = rest.coefficient(v, 0);
      }
      for (std::size_t k = 0; k < where.size() && linear; ++k) {
        bool solved_or_current = where[k].second <= col;
        if (!solved_or_current)
          for (const auto& c : coeffs)
            if (c.degree_in(n + k) > 0)
              linear = false;
      }
      for (const auto& c : coeffs)
        for (auto v : unknown)
          if (c.degree_in(v) > 0)
            linear = false;
      if (linear && rest.is_zero())
        rows.push_back(coeffs);
    }
    // look for a nonzero maximal minor of the coefficient matrix
    const std::size_t m = unknown.size();
    bool found = false;
    std::vector<std::size_t> pick(m);
    std::function<void(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) {
      if (found)
        return;
      if (depth == m) {
        PolyMat minor(m, m);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            minor(r, c) = rows[pick[r]][c];
        MPoly d = det_by_minors(minor);
        if (!d.is_zero()) {
          found = true;
          out.steps.push_back("column " + std::to_string(col + 1) + ": minor " + d.to_string() + " != 0");
        }
        return;
      }
      for (std::size_t r = start; r < rows.size(); ++r) {
        pick[depth] = r;
        search(r + 1, depth + 1);
      }
    };
    search(0, 0);
    if (!found) {
      out.trivial = false;
      out.steps.push_back("column " + std::to_string(col + 1) + ": no nonzero minor");
      return out;
    }
    for (auto v : unknown)
      for (auto& e : eqs.data_mut())
        if (!e.is_zero())
          e = e.specialize(v, Rat(0));
  }
  for (const auto& e : eqs.data())
    if (!e.is_zero())
      out.trivial = false;
  return out;
}

TwistedRandom twisted_centralizer_random(const RatVec& a, TrialRng& rng, std::size_t samples) {
  const std::size_t n = a.size();
  Mat g = Rat(-1, 2) * (j_prime(n) * inverse(y_matrix(a)).transpose());
  TwistedRandom out{true, samples, {}};
  if (n < 2)
    return out;
  for (std::size_t s = 0; s < samples; ++s) {
    Mat u = Mat::identity(n);
    bool nontrivial = false;
    while (!nontrivial) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          u(i, j) = rng.any();
          nontrivial = nontrivial || !u(i, j).is_zero();
        }
    }
    if (in_twisted_centralizer(u, g)) {
      out.trivial = false;
      out.members.push_back(u);
    }
  }
  return out;
}

}  // namespace gspin

#include "gspin/orbit_measure.hpp"

#include "gspin/error.hpp"
#include "gspin/exact/linalg.hpp"
#include "gspin/root_data.hpp"

#include <stdexcept>

namespace gspin {

Mat canonical_rep(const RatVec& a) {
  const std::size_t n = a.size();
  Mat c(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i + 1) = a[i];
    c(i + 1, i) = -a[i];
  }
  return c;
}

Mat act_on_skew(const Mat& u, const Mat& z_tilde) {
  Mat big = block_diag<Rat>({u, Mat::identity(1)});
  return big * z_tilde * big.transpose();
}

Mat skew_from(const Mat& z, const RatVec& alpha) {
  const std::size_t n = alpha.size();
  Mat s(n + 1, n + 1);
  s.set_block(0, 0, z);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, n) = alpha[i];
    s(n, i) = -alpha[i];
  }
  return s;
}

OrbitReduction reduce_orbit(const Mat& z_tilde) {
  if (!z_tilde.square() || z_tilde.rows() < 2)
    throw std::invalid_argument("reduce_orbit needs a square matrix of size at least 2");
  if (!(z_tilde + z_tilde.transpose()).is_zero())
    throw std::invalid_argument("reduce_orbit needs a skew-symmetric matrix");
  const std::size_t n = z_tilde.rows() - 1;
  Mat current = z_tilde;
  Mat total = Mat::identity(n);
  RatVec a(n);
  for (std::size_t i = n; i >= 1; --i) {
    // current is skew of size i+1; its last column above the diagonal is (beta', b_i)
    Rat b = current(i - 1, i);
    if (b.is_zero())
      throw VerificationError("reduce_orbit", "stage " + std::to_string(i), "zero pivot z_{" +
                              std::to_string(i) + "," + std::to_string(i + 1) + "}");
    a[i - 1] = b;
    Mat ui = Mat::identity(i);
    for (std::size_t r = 0; r + 1 < i; ++r)
      ui(r, i - 1) = -current(r, i) / b;
    Mat next = ui * current.block(0, 0, i, i) * ui.transpose();
    total = block_diag<Rat>({ui, Mat::identity(n - i)}) * total;
    current = next;
  }
  return {total, a};
}

Uniqueness orbit_uniqueness_check(const RatVec& a, const RatVec& a_prime) {
  const std::size_t n = a.size();
  if (a_prime.size() != n)
    throw std::invalid_argument("representatives of different size");
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      names.push_back("u" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      where.emplace_back(i, j);
    }
  auto vars = MPoly::variables(names);
  PolyMat u = PolyMat::identity(n + 1);
  for (std::size_t k = 0; k < where.size(); ++k)
    u(where[k].first, where[k].second) = vars[k];
  PolyMat diff = u * to_poly(canonical_rep(a)) * u.transpose() - to_poly(canonical_rep(a_prime));

  std::vector<Rat> value(names.size(), Rat(0));
  auto substitute = [&](std::size_t var, const Rat& v) {
    value[var] = v;
    for (std::size_t r = 0; r <= n; ++r)
      for (std::size_t c = 0; c <= n; ++c)
        if (!diff(r, c).vars().empty())
          diff(r, c) = diff(r, c).specialize(var, v);
  };
  auto var_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < where.size(); ++k)
      if (where[k].first == i && where[k].second == j)
        return k;
    throw std::logic_error("no such unipotent coordinate");
  };
  // column level: the last column of the leading (level+1)-block compares alpha-vectors
  for (std::size_t level = n; level >= 1; --level) {
    for (std::size_t r = 0; r < level; ++r) {
      MPoly eq = diff(r, level);
      std::size_t unknown = names.size();
      for (std::size_t r2 = 0; r2 + 1 < level; ++r2) {
        std::size_t v = var_of(r2, level - 1);
        if (!eq.vars().empty() && eq.degree_in(v) > 0)
          unknown = v;
      }
      if (unknown == names.size()) {
        if (!eq.is_zero())
          return {false, Mat()};
        continue;
      }
      MPoly lead = eq.coefficient(unknown, 1), rest = eq.coefficient(unknown, 0);
      if (eq.degree_in(unknown) != 1 || !lead.is_constant() || !rest.is_constant())
        throw std::logic_error("orbit_uniqueness_check: equation is not linear in one coordinate");
      substitute(unknown, -rest.constant_term() / lead.constant_term());
    }
  }
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t c = 0; c <= n; ++c)
      if (!diff(r, c).is_zero())
        return {false, Mat()};
  Mat conj = Mat::identity(n);
  for (std::size_t k = 0; k < where.size(); ++k)
    conj(where[k].first, where[k].second) = value[k];
  return {true, conj};
}

std::vector<std::string> measure_variables(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      names.push_back("u" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("a" + std::to_string(i + 1));
  return names;
}

std::vector<MPoly> orbit_map(std::size_t n) {
  auto names = measure_variables(n);
  auto vars = MPoly::variables(names);
  PolyMat u = PolyMat::identity(n + 1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      u(i, j) = vars[k++];
  PolyMat c(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i + 1) = vars[k + i];
    c(i + 1, i) = -vars[k + i];
  }
  PolyMat image = u * c * u.transpose();
  std::vector<MPoly> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      out.push_back(image(i, j));
  return out;
}

namespace {

MPoly expected_density(std::size_t n, const std::vector<std::string>& names) {
  MPoly e = MPoly::constant(names, 1);
  for (std::size_t i = 0; i < n; ++i)
    e *= MPoly::variable(names, names.size() - n + i).pow(static_cast<unsigned>(i));
  return e;
}

}  // namespace

MeasureSymbolic measure_jacobian_symbolic(std::size_t n) {
  if (n > 3)
    throw std::invalid_argument("symbolic measure check supports n <= 3");
  auto names = measure_variables(n);
  MPoly jac = jacobian_det(orbit_map(n), names);
  MPoly expected = expected_density(n, names);
  int sign = jac == expected ? 1 : (jac == -expected ? -1 : 0);
  return {jac, expected, sign};
}

MeasureRandom measure_jacobian_random(std::size_t n, TrialRng& rng, std::size_t points) {
  auto names = measure_variables(n);
  PolyMat jac = jacobian_matrix(orbit_map(n), names);
  long degree = 0;
  for (std::size_t r = 0; r < jac.rows(); ++r) {
    long d = 0;
    for (std::size_t c = 0; c < jac.cols(); ++c)
      d = std::max(d, jac(r, c).total_degree());
    degree += d;
  }
  degree = std::max<long>(degree, static_cast<long>(n * (n - 1) / 2));
  MeasureRandom out{true, points, degree, Rat(degree, Int(2 * kSampleBound)), {}};
  for (std::size_t p = 0; p < points; ++p) {
    RatVec pt = rng.nonzero_vector(names.size());
    Mat m = jac.map([&](const MPoly& f) { return f.evaluate(pt); });
    Rat expected(1);
    for (std::size_t i = 0; i < n; ++i)
      expected *= pt[names.size() - n + i].pow(static_cast<long>(i));
    if (!(bareiss_det(m).abs() == expected.abs())) {
      out.ok = false;
      out.failures.push_back(pt);
    }
  }
  return out;
}

QuotientExponents quotient_measure_exponents(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("quotient exponents need n >= 2");
  // after a_i -> t^2 a_i (i < n), a_n = t, the density of t is |t|^(<2 rho, cochar> - 1)
  Rat t_exp = pairing_report(static_cast<int>(n)).t_exponent - 1;
  // unknowns k_1..k_{n-1}; equations: exponent of |a_i| is i-1 for i < n, and for a_n the
  // remaining power t_exp - 2 sum k_i - 2 (n - 1) must equal n - 1
  const std::size_t m = n - 1;
  Mat sys(n, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    sys(i, i) = 1;
    sys(i, m) = Rat(static_cast<long>(i));
  }
  for (std::size_t i = 0; i < m; ++i)
    sys(m, i) = 2;
  sys(m, m) = t_exp - Rat(static_cast<long>(2 * (n - 1))) - Rat(static_cast<long>(n - 1));
  Mat coeff = sys.block(0, 0, m, m);
  Mat rhs = sys.block(0, m, m, 1);
  Mat sol = inverse(coeff) * rhs;
  std::vector<Rat> k = sol.col_vector(0);
  Rat used(0);
  for (const auto& x : k)
    used += 2 * x;
  Rat residue = sys(m, m) - used;
  return {k, t_exp, residue, rank(sys.block(0, 0, n, m)) == m};
}

}  // namespace gspin

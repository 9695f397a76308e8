#include "wordstat/realfuncs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wordstat {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kInvPhi = 0.61803398874989484820;  // golden ratio conjugate

void require_closed_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + ": argument outside [0, 1]: " + std::to_string(x));
  }
}

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error(std::string(what) + ": argument outside (0, 1): " + std::to_string(x));
  }
}

// x ln x with the limit 0 at x = 0.
double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

template <class F>
double golden_max(F&& f, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Root of a monotone g on [lo, hi] with g(lo), g(hi) of opposite sign.
template <class G>
double bisect(G&& g, double lo, double hi) {
  double glo = g(lo);
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
}

}  // namespace

double softplus(double y) {
  if (y >= 0.0) return std::log1p(std::exp(-y));
  return -y + std::log1p(std::exp(y));
}

double one_minus_exp_softplus(double y) {
  if (y < 0.0) {
    const double s = std::exp(y);
    return 1.0 - s * (-y + std::log1p(s));
  }
  const double t = std::exp(-y);
  if (t < 1e-2) {
    // 1 - log1p(t)/t = t/2 - t^2/3 + t^3/4 - ...
    double sum = 0.0;
    double tk = t;
    for (int k = 1; k <= 14; ++k) {
      sum += ((k % 2 == 1) ? tk : -tk) / (k + 1);
      tk *= t;
    }
    return sum;
  }
  return 1.0 - std::log1p(t) / t;
}

double log_varphi(double x) {
  require_closed_unit(x, "varphi");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -xlogx(x) - (1.0 - x) * std::log1p(-x);
}

double varphi(double x) {
  require_closed_unit(x, "varphi");
  if (x == 0.0 || x == 1.0) return 1.0;
  return std::exp(log_varphi(x));
}

double gamma_fn(double x) {
  require_closed_unit(x, "gamma");
  return std::sqrt(x * (1.0 - x));
}

double log_theta(double x) {
  require_closed_unit(x, "theta");
  if (x == 0.0) return kNegInf;
  if (x == 1.0) return 1.0;
  return (1.0 - x) * std::log(x) + x;
}

double theta(double x) {
  require_closed_unit(x, "theta");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return std::exp(1.0);
  return std::exp(log_theta(x));
}

double log_eta(double x) {
  require_closed_unit(x, "eta");
  if (x == 0.0) return kNegInf;
  if (x == 1.0) return 0.0;
  return (1.0 - x) * std::log(x) + log_varphi(x);
}

double eta(double x) {
  require_closed_unit(x, "eta");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return std::exp(log_eta(x));
}

double log_kappa(double x) {
  require_closed_unit(x, "kappa");
  if (x == 1.0) return 0.0;
  const double u = 1.0 - x;
  return u * (1.0 - kLn2) - u * std::log(u);
}

double kappa(double x) {
  require_closed_unit(x, "kappa");
  if (x == 1.0) return 1.0;
  return std::exp(log_kappa(x));
}

double log_nu(double x) {
  require_closed_unit(x, "nu");
  if (x == 0.0) return kNegInf;
  if (x == 1.0) return -1.0;
  return std::log(x) - x + 2.0 * log_varphi(x);
}

double nu(double x) {
  require_closed_unit(x, "nu");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return std::exp(-1.0);
  return std::exp(log_nu(x));
}

double delta_inv(double y) {
  if (std::isnan(y)) throw std::domain_error("delta_inv: NaN");
  if (y >= 0.0) {
    const double t = std::exp(-y);
    if (t == 0.0) return 1.0;
    // (1 + e^y) ln(1 + e^{-y}) = (1 + t) ln(1 + t) / t
    return t / ((1.0 + t) * std::log1p(t));
  }
  const double s = std::exp(y);
  return 1.0 / ((1.0 + s) * (-y + std::log1p(s)));
}

double delta(double x, const DeltaSolver& solver) {
  require_open_unit(x, "delta");
  double lo = std::min(solver.bracket_low, solver.bracket_high);
  double hi = std::max(solver.bracket_low, solver.bracket_high);
  int doublings = 0;
  while (delta_inv(lo) > x) {
    lo = lo < 0.0 ? 2.0 * lo : -1.0;
    if (++doublings > 1100) throw std::logic_error("delta: failed to bracket from below");
  }
  doublings = 0;
  while (delta_inv(hi) < x) {
    hi = hi > 0.0 ? 2.0 * hi : 1.0;
    if (++doublings > 1100) throw std::logic_error("delta: failed to bracket from above");
  }
  for (int it = 0; it < solver.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (delta_inv(mid) < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(delta_inv(lo) - x) <= std::abs(delta_inv(hi) - x) ? lo : hi;
}

double log_psi(double x) {
  require_open_unit(x, "psi");
  const double d = delta(x);
  return -(1.0 - x) - x * d - xlogx(x) - std::log(softplus(d));
}

double psi(double x) { return std::exp(log_psi(x)); }

double mu(double x) {
  require_open_unit(x, "mu");
  double radicand = x * one_minus_exp_softplus(delta(x));
  if (radicand < 0.0) {
    if (radicand < -1e-12) throw std::logic_error("mu: negative radicand beyond roundoff");
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

double log_phi(double x) {
  require_open_unit(x, "phi");
  const double d = delta(x);
  return -1.0 - x * d + log_varphi(x) - std::log(softplus(d));
}

double phi(double x) { return std::exp(log_phi(x)); }

double phi_closed(double x) {
  if (x == 0.0) return 0.0;
  if (x == 1.0) return std::exp(-1.0);
  return phi(x);
}

UnitRoots nu_unit_roots(double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("nu_unit_roots: tolerance must be positive");
  constexpr double lo = 1e-9;
  constexpr double hi = 1.0 - 1e-9;
  const double top = golden_max([](double x) { return nu(x); }, lo, hi, 1e-12);
  const auto g = [](double x) { return nu(x) - 1.0; };
  if (!(g(lo) < 0.0 && g(top) > 0.0 && g(hi) < 0.0)) {
    throw std::logic_error("nu_unit_roots: nu does not cross 1 twice");
  }
  UnitRoots r{bisect(g, lo, top), bisect(g, top, hi), top};
  if (std::abs(g(r.x0)) > tolerance || std::abs(g(r.x1)) > tolerance) {
    throw std::logic_error("nu_unit_roots: tolerance not reached");
  }
  return r;
}

LambdaCertificate lambda_for(double r0, double r1) {
  static const UnitRoots roots = nu_unit_roots();
  if (!(r0 > 0.0 && r0 < roots.x0)) {
    throw std::domain_error("lambda_for: r0 must lie in (0, x0) with x0 = " +
                            std::to_string(roots.x0));
  }
  if (!(r1 > roots.x1 && r1 < 1.0)) {
    throw std::domain_error("lambda_for: r1 must lie in (x1, 1) with x1 = " +
                            std::to_string(roots.x1));
  }
  LambdaCertificate c{nu(r0), nu(r1), 0.0};
  c.lambda = std::max(c.lambda0, c.lambda1);
  return c;
}

MuExtrema mu_extrema(double r, Exec exec) {
  if (!(r > 0.0 && r < 0.5)) throw std::domain_error("mu_extrema: r must lie in (0, 1/2)");
  constexpr double step = 1e-4;
  const double lo = r;
  const double hi = 1.0 - r;
  const int count = static_cast<int>(std::ceil((hi - lo) / step)) + 1;
  std::vector<double> xs(count);
  std::vector<double> ys(count);
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (int i = 0; i < count; ++i) {
    xs[i] = i + 1 == count ? hi : lo + i * step;
    ys[i] = mu(xs[i]);
  }
  const auto imax = static_cast<int>(std::max_element(ys.begin(), ys.end()) - ys.begin());
  const auto imin = static_cast<int>(std::min_element(ys.begin(), ys.end()) - ys.begin());

  MuExtrema e{ys[imin], ys[imax], xs[imin], xs[imax]};
  if (imax > 0 && imax + 1 < count) {
    e.argmax = golden_max([](double x) { return mu(x); }, xs[imax - 1], xs[imax + 1], 1e-12);
    e.max = std::max(e.max, mu(e.argmax));
  }
  if (imin > 0 && imin + 1 < count) {
    e.argmin = golden_max([](double x) { return -mu(x); }, xs[imin - 1], xs[imin + 1], 1e-12);
    e.min = std::min(e.min, mu(e.argmin));
  }
  return e;
}

namespace {

struct NamedFunction {
  RealFunction id;
  std::string_view name;
};

constexpr std::array<NamedFunction, 10> kFunctions{{
    {RealFunction::varphi, "varphi"},
    {RealFunction::gamma, "gamma"},
    {RealFunction::theta, "theta"},
    {RealFunction::eta, "eta"},
    {RealFunction::kappa, "kappa"},
    {RealFunction::nu, "nu"},
    {RealFunction::delta, "delta"},
    {RealFunction::psi, "psi"},
    {RealFunction::mu, "mu"},
    {RealFunction::phi, "phi"},
}};

}  // namespace

std::string_view function_name(RealFunction f) {
  for (const auto& nf : kFunctions) {
    if (nf.id == f) return nf.name;
  }
  throw std::invalid_argument("function_name: unknown function");
}

RealFunction function_from_name(std::string_view name) {
  for (const auto& nf : kFunctions) {
    if (nf.name == name) return nf.id;
  }
  throw std::invalid_argument("unknown function name: " + std::string(name));
}

double evaluate(RealFunction f, double x) {
  switch (f) {
    case RealFunction::varphi: return varphi(x);
    case RealFunction::gamma: return gamma_fn(x);
    case RealFunction::theta: return theta(x);
    case RealFunction::eta: return eta(x);
    case RealFunction::kappa: return kappa(x);
    case RealFunction::nu: return nu(x);
    case RealFunction::delta: return delta(x);
    case RealFunction::psi: return psi(x);
    case RealFunction::mu: return mu(x);
    case RealFunction::phi: return phi(x);
  }
  throw std::invalid_argument("evaluate: unknown function");
}

FunctionGrid sample(RealFunction f, std::span<const double> xs, Exec exec) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("sample: xs must be strictly increasing");
  }
  // Domain errors must surface here, not inside the parallel loop.
  const bool open_domain = f == RealFunction::delta || f == RealFunction::psi ||
                           f == RealFunction::mu || f == RealFunction::phi;
  for (const double x : xs) {
    if (open_domain) {
      require_open_unit(x, "sample");
    } else {
      require_closed_unit(x, "sample");
    }
  }
  FunctionGrid g{std::string(function_name(f)), {xs.begin(), xs.end()},
                 std::vector<double>(xs.size())};
  const auto count = static_cast<long>(xs.size());
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (long i = 0; i < count; ++i) g.ys[i] = evaluate(f, g.xs[i]);
  return g;
}

FunctionGrid sample_uniform(RealFunction f, double lo, double hi, int count, Exec exec) {
  if (count < 2 || !(hi > lo)) throw std::invalid_argument("sample_uniform: need count >= 2, hi > lo");
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = i + 1 == count ? hi : lo + (hi - lo) * i / (count - 1);
  }
  return sample(f, xs, exec);
}

}  // namespace wordstat

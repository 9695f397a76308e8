#ifndef WORDSTAT_REALFUNCS_HPP
#define WORDSTAT_REALFUNCS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordstat/exec.hpp"

namespace wordstat {

/// ln(1 + e^{-y}) without overflow or cancellation for any finite y.
double softplus(double y);

/// 1 - e^{y} ln(1 + e^{-y}), the saddle-point variance factor. Computed by
/// series when e^{-y} is small, where the direct form cancels.
double one_minus_exp_softplus(double y);

// Functions on [0, 1]. The log_ forms return -inf where the function is 0;
// endpoint values are fixed explicitly rather than left to pow().

/// x^{-x} (1-x)^{-(1-x)}, equal to 1 at both endpoints.
double varphi(double x);
double log_varphi(double x);

/// (x - x^2)^{1/2}
double gamma_fn(double x);

/// x^{1-x} e^x
double theta(double x);
double log_theta(double x);

/// x^{1-x} varphi(x)
double eta(double x);
double log_eta(double x);

/// (e/2)^{1-x} (1-x)^{-(1-x)}, kappa(1) = 1
double kappa(double x);
double log_kappa(double x);

/// x e^{-x} varphi(x)^2
double nu(double x);
double log_nu(double x);

/// 1 / ((1 + e^y) ln(1 + e^{-y})); strictly increasing from 0 to 1.
double delta_inv(double y);

struct DeltaSolver {
  double tolerance = 1e-13;  ///< on |delta_inv(y) - x|
  int max_iterations = 200;
  double bracket_low = -1.0;  ///< starting bracket, doubled outward as needed
  double bracket_high = 1.0;
};

/// The saddle point alpha solving delta_inv(alpha) = x, for x in (0, 1).
double delta(double x, const DeltaSolver& solver = {});

double psi(double x);
double log_psi(double x);

/// (x (1 - e^{delta} ln(1 + e^{-delta})))^{1/2}
double mu(double x);

/// e^{-1 - x delta(x)} varphi(x) / ln(1 + e^{-delta(x)}); peaks at 1 when x = 1 - 1/e.
double phi(double x);
double log_phi(double x);
/// phi on the closed interval, with its limits phi(0+) = 0 and phi(1-) = 1/e.
double phi_closed(double x);

struct UnitRoots {
  double x0;
  double x1;
  double argmax;  ///< location of the maximum of nu
};

/// The two solutions of nu(x) = 1, x0 < x1.
UnitRoots nu_unit_roots(double tolerance = 1e-14);

struct LambdaCertificate {
  double lambda0;  ///< nu(r0)
  double lambda1;  ///< nu(r1)
  double lambda;   ///< max of the two, < 1
};

/// Tail rate for cutoffs 0 < r0 < x0 and x1 < r1 < 1.
LambdaCertificate lambda_for(double r0, double r1);

struct MuExtrema {
  double min;
  double max;
  double argmin;
  double argmax;
};

/// Extremes of mu on [r, 1 - r] for 0 < r < 1/2: grid scan at step 1e-4,
/// then golden-section refinement of interior extrema.
MuExtrema mu_extrema(double r, Exec exec = Exec::serial);

enum class RealFunction { varphi, gamma, theta, eta, kappa, nu, delta, psi, mu, phi };

std::string_view function_name(RealFunction f);
RealFunction function_from_name(std::string_view name);
double evaluate(RealFunction f, double x);

struct FunctionGrid {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Evaluates f at strictly increasing xs.
FunctionGrid sample(RealFunction f, std::span<const double> xs, Exec exec = Exec::serial);

/// count points spaced evenly over [lo, hi].
FunctionGrid sample_uniform(RealFunction f, double lo, double hi, int count,
                            Exec exec = Exec::serial);

}  // namespace wordstat

#endif  // WORDSTAT_REALFUNCS_HPP

#include "gelfem/analytic.hpp"
#include "gelfem/format.hpp"
#include "gelfem/material.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace gelfem::analytic {

namespace {

MaterialParams dry_params(double Nv, double chi, double mu_bar) {
  MaterialParams p;
  p.Nv = Nv;
  p.chi = chi;
  p.mu_bar = mu_bar;
  p.mu0_bar = mu_bar;
  return p;
}

}  // namespace

FreeSwellingCurve free_swelling_curve(double Nv, double chi, std::span<const double> mu_grid) {
  FreeSwellingCurve c;
  for (double mu : mu_grid) {
    try {
      c.lambda.push_back(solve_free_swelling_stretch(Nv, chi, mu));
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << "free swelling curve at mu_bar=" << mu << ": " << e.what();
      throw DomainError(msg.str());
    }
    c.mu_bar.push_back(mu);
  }
  return c;
}

double uniaxial_residual(double Nv, double chi, double mu_bar, double l1, double l2) {
  const double J = l1 * l2 * l2;
  return Nv * (l2 - 1.0 / l2) + (J * std::log1p(-1.0 / J) + 1.0 + chi / J - mu_bar * J) / l2;
}

double uniaxial_residual_from_stress(double Nv, double chi, double mu_bar, double l1, double l2) {
  const Mat3 F = Eigen::Vector3d(l1, l2, l2).asDiagonal();
  return dry_nominal_stress(dry_params(Nv, chi, mu_bar), F)(1, 1);
}

double uniaxial_transverse_stretch(double Nv, double chi, double mu_bar, double l1) {
  if (!(l1 > 0.0)) throw DomainError("uniaxial: lambda1 must be positive");
  // lambda2 > 1/sqrt(lambda1) keeps J > 1.
  double lo = (1.0 + 1e-9) / std::sqrt(l1);
  double hi = 100.0;
  auto f = [&](double l2) { return uniaxial_residual(Nv, chi, mu_bar, l1, l2); };
  if (!(f(lo) < 0.0) || !(f(hi) > 0.0)) {
    std::ostringstream msg;
    msg << "uniaxial: no admissible transverse stretch bracketed for lambda1=" << l1
        << ", mu_bar=" << mu_bar;
    throw DomainError(msg.str());
  }
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) lo = mid; else hi = mid;
  }
  // Newton with a central-difference slope, kept inside the bracket.
  double l2 = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double r = f(l2);
    if (r == 0.0) break;
    if (r < 0.0) lo = l2; else hi = l2;
    const double h = 1e-7 * l2;
    double next = l2 - r * 2.0 * h / (f(l2 + h) - f(l2 - h));
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - l2);
    l2 = next;
    if (step < 1e-14 * l2) break;
  }
  return l2;
}

double uniaxial_nominal_stress(double Nv, double chi, double mu_bar, double l1, double l2) {
  const Mat3 F = Eigen::Vector3d(l1, l2, l2).asDiagonal();
  return dry_nominal_stress(dry_params(Nv, chi, mu_bar), F)(0, 0);
}

UniaxialCurve uniaxial_curve(double Nv, double chi, double mu_bar, std::span<const double> grid) {
  UniaxialCurve c;
  c.mu_bar = mu_bar;
  for (double l1 : grid) {
    const double l2 = uniaxial_transverse_stretch(Nv, chi, mu_bar, l1);
    c.lambda1.push_back(l1);
    c.lambda2.push_back(l2);
    c.stress.push_back(uniaxial_nominal_stress(Nv, chi, mu_bar, l1, l2));
  }
  return c;
}

double stretch_from_displacement(double delta, double L, double lambda0) {
  return (1.0 + delta / L) * lambda0;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw Error("linspace: need at least one point");
  std::vector<double> v;
  v.reserve(n);
  if (n == 1) return {a};
  for (int k = 0; k < n; ++k) v.push_back(k == n - 1 ? b : a + (b - a) * k / (n - 1));
  return v;
}

void write_csv(std::ostream& os, const FreeSwellingCurve& curve) {
  os << "mu_bar,lambda\n";
  for (std::size_t k = 0; k < curve.mu_bar.size(); ++k)
    os << fmt17(curve.mu_bar[k]) << ',' << fmt17(curve.lambda[k]) << '\n';
}

void write_csv(std::ostream& os, const UniaxialCurve& curve) {
  os << "lambda1,lambda2,stress\n";
  for (std::size_t k = 0; k < curve.lambda1.size(); ++k)
    os << fmt17(curve.lambda1[k]) << ',' << fmt17(curve.lambda2[k]) << ',' << fmt17(curve.stress[k])
       << '\n';
}

}  // namespace gelfem::analytic

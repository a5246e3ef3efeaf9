#pragma once

// Closed-form homogeneous gel states: free swelling and the uniaxial bar.
// Stretches are measured from the dry network; stresses are nominal, per
// unit dry area, in kT/v.

#include <iosfwd>
#include <span>
#include <vector>

namespace gelfem::analytic {

struct FreeSwellingCurve {
  std::vector<double> mu_bar;
  std::vector<double> lambda;
};

struct UniaxialCurve {
  double mu_bar = 0.0;
  std::vector<double> lambda1;
  std::vector<double> lambda2;
  std::vector<double> stress;  ///< axial nominal stress
};

/// Throws DomainError naming the offending mu when a point has no root.
FreeSwellingCurve free_swelling_curve(double Nv, double chi, std::span<const double> mu_grid);

/// Transverse balance of the bar as usually printed:
/// Nv(l2 - 1/l2) + [J ln(1 - 1/J) + 1 + chi/J - mu J] / l2, J = l1 l2^2.
double uniaxial_residual(double Nv, double chi, double mu_bar, double lambda1, double lambda2);

/// The same balance obtained from the nominal stress: P22 of
/// F = diag(l1, l2, l2) in the dry frame.
double uniaxial_residual_from_stress(double Nv, double chi, double mu_bar, double lambda1,
                                     double lambda2);

/// Root in lambda2 with lambda1 * lambda2^2 > 1. Throws DomainError when no
/// admissible root is bracketed.
double uniaxial_transverse_stretch(double Nv, double chi, double mu_bar, double lambda1);

/// Axial nominal stress P11 at F = diag(l1, l2, l2).
double uniaxial_nominal_stress(double Nv, double chi, double mu_bar, double lambda1, double lambda2);

UniaxialCurve uniaxial_curve(double Nv, double chi, double mu_bar, std::span<const double> lambda1_grid);

/// lambda = (1 + delta / L) lambda0.
double stretch_from_displacement(double delta, double L, double lambda0);

/// n evenly spaced points from a to b inclusive (n >= 1; n == 1 gives {a}).
std::vector<double> linspace(double a, double b, int n);

/// Header "mu_bar,lambda".
void write_csv(std::ostream& os, const FreeSwellingCurve& curve);
/// Header "lambda1,lambda2,stress".
void write_csv(std::ostream& os, const UniaxialCurve& curve);

}  // namespace gelfem::analytic

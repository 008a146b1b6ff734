#pragma once

#include <map>
#include <string>
#include <vector>

#include "diracnl/transform_core.hpp"

namespace diracnl {

/// Normalized variance of a transformed Gaussian packet.
struct VarianceResult {
  TransformKind kind = TransformKind::FW;
  double d = 1.0;          // packet width, Compton-wavelength units
  double value = 0.0;      // <r^2>/<r^0>, squared Compton wavelengths
  double norm_check = 0.0; // numerically evaluated <r^0>; should be 1
  std::map<std::string, double> breakdown;
};

/// Closed forms in terms of the A integrals:
///   V_MO = 3/4 d^2 + 11/4 d^2 - 2 d^2 (dbar/sqrt(pi)) [A_1^0 + A_2^0]
///   V_FW = 7/2 d^2 + d^2 (dbar/sqrt(pi)) [A_1^0 - A_2^0 - 4 A_{1/2}^0]
VarianceResult variance_mo_closed(double d);
VarianceResult variance_fw_closed(double d);
VarianceResult variance_closed(TransformKind kind, double d);

/// Independent check: builds the transformed momentum-space spinor on a
/// radial grid and evaluates <r^2> as the momentum-gradient quadratic form
/// (composite Simpson, two-level refinement; throws if the refinements
/// disagree by more than 1e-4 relative).
double variance_oracle(TransformKind kind, double d);

/// Same machinery applied to the untransformed packet; equals 3 d^2 / 2.
double variance_oracle_identity(double d);

/// Numerically evaluated cross moment <r^n>_12 between the local and
/// integral parts of the MO-transformed packet; vanishes analytically.
Complex mo_cross_moment(int n, double d);

std::vector<double> log_grid(double lo, double hi, int points);

std::vector<VarianceResult> variance_sweep(TransformKind kind,
                                           const std::vector<double>& d_grid);

} // namespace diracnl

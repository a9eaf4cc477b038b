#pragma once

#include "qsr/quadrature.hpp"
#include "qsr/types.hpp"

namespace qsr {

/// Parametric integrals f_k(x), k = 1, 2, 3, entering the n = 1 radiation
/// formulas, and f_0 = f_2 + f_3.
///
/// f_1 has a closed form for both particles. f_2 and f_3 are integrated after
/// the substitution y = (1 - t^2) / (1 - x^2 t^2), which removes the
/// 1/sqrt(1 - y) endpoint singularity of the original representation; the
/// resulting integrands are bounded on t in [0, 1] for |x| < 1.
///
/// Boson arguments used by the radiation formulas lie in [0, 2 - sqrt(3)],
/// electron arguments in [0, 1].
namespace integrals {

/// Below this argument the f_1 closed forms switch to their Taylor series.
inline constexpr double kSmallArgument = 1e-4;
/// Electron f_2, f_3 use the x -> 1 expansion when 1 - x < kBoundaryWidth.
inline constexpr double kBoundaryWidth = 1e-6;

/// Integrand of f_k over t in [0, 1] after substitution, prefactor included.
/// k must be 2 or 3; 0 <= x < 1.
double substituted_integrand(Particle kind, int k, double x, double t);

/// Leading terms of the electron integrals as x -> 1.
double electron_boundary_series(int k, double x);

/// Leading terms of the electron integrals as x -> 0.
double electron_small_series(int k, double x);

}  // namespace integrals

/// Boson integral f_k^b(x), k in {0, 1, 2, 3}, x in [0, 1].
double f_b(int k, double x, const QuadratureConfig& cfg = {});

/// Electron integral f_k^e(x), k in {0, 1, 2, 3}, x in [0, 1].
double f_e(int k, double x, const QuadratureConfig& cfg = {});

/// Dispatch on particle kind.
double f_k(Particle kind, int k, double x, const QuadratureConfig& cfg = {});

}  // namespace qsr

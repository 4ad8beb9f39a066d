#pragma once

#include <complex>
#include <functional>

#include "schro/grid.hpp"
#include "schro/sbp.hpp"

namespace schro {

/// Rule deriving the interface coupling strength L from the grid spacing.
enum class LScaling {
    explicit_bound,  ///< L = 1/(sigma_0 dx^2), the explicit-stability bound
    dx_pow2,         ///< L = coeff / dx^2
    dx_pow3          ///< L = coeff / dx^3
};

/// Semi-discrete right-hand side configuration.
///
/// Exactly one of `op` (interface coupling at the grid ends) or `periodic`
/// (wraparound stencil) must be set; both are non-owning.
struct SchemeConfig {
    const SbpOperator* op = nullptr;
    const PeriodicStencil* periodic = nullptr;
    /// Resolved coupling strength actually applied by rhs_interface.
    /// Real part >= 0; imaginary part <= 0 (a negative imaginary part is
    /// strictly dissipative at the interface).
    std::complex<double> interaction_factor{0.0, 0.0};
    LScaling l_scaling = LScaling::explicit_bound;
    double l_coeff = 1000.0;      ///< coefficient for the dx-power rules
    double dissipation_epsilon = 0.0;
    /// Optional real potential V(x, t); empty means V == 0.
    std::function<double(double, double)> potential;
};

/// Magnitude of L implied by the scaling rule for the given operator.
double resolve_interaction_factor(LScaling scaling, double coeff,
                                  const SbpOperator& op);

/// i u_t = u_xx + V u with the grid ends coupled by derivative corrections
/// plus a two-point penalty:
///   rhs_j = -i (DDu)_j - i V_j u_j + diss_j
///           + delta_{j,0} [ -i/(dx sigma_0) (Du)_0 - i L (u_0 - u_N) ]
///           + delta_{j,N} [ +i/(dx sigma_N) (Du)_N + i L (u_0 - u_N) ].
/// For real L and epsilon = 0 this operator is anti-Hermitian in the
/// sigma-weighted inner product.
WaveFunction rhs_interface(const SchemeConfig& cfg, const WaveFunction& u,
                           double t);

/// rhs_j = -i (DDu)_j - i V_j u_j on the wraparound grid.
WaveFunction rhs_periodic(const SchemeConfig& cfg, const WaveFunction& u,
                          double t);

/// Splits rhs_interface into the part integrated explicitly and the stiff
/// two-point penalty: expl + stiff == rhs_interface exactly (same operations,
/// penalty terms omitted from expl and isolated in stiff).
void rhs_interface_split(const SchemeConfig& cfg, const WaveFunction& u,
                         double t, WaveFunction& expl, WaveFunction& stiff);

/// Diagnostic variant without the two derivative corrections (penalty,
/// potential and dissipation kept): its energy rate equals the uncancelled
/// boundary flux  Re<u, rhs(u)>_sigma = +Im(conj(u_N)(Du)_N - conj(u_0)(Du)_0)
/// for real L and epsilon = 0.
WaveFunction rhs_interface_no_sat(const SchemeConfig& cfg,
                                  const WaveFunction& u, double t);

/// Kreiss-Oliger dissipation -(epsilon/dx) (undivided second difference)^4,
/// a 9-point stencil; rows within 4 points of either grid end are zero.
WaveFunction ko_dissipation(const SbpOperator& op, double epsilon,
                            const WaveFunction& u);

/// Same stencil with wraparound indexing (acts on every row).
WaveFunction ko_dissipation(const PeriodicStencil& st, double epsilon,
                            const WaveFunction& u);

/// |Re<u, rhs_interface(u)>_sigma| with the whole evaluation (derivatives,
/// penalty, inner product) carried out in extended precision, so the result
/// reflects the operator algebra rather than double rounding of large L terms.
double interface_energy_rate(const SchemeConfig& cfg, const WaveFunction& u);

/// |<v, rhs(u)>_sigma + <rhs(v), u>_sigma| in extended precision.
double interface_hermiticity_defect(const SchemeConfig& cfg,
                                    const WaveFunction& u,
                                    const WaveFunction& v);

}  // namespace schro

#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "schro/grid.hpp"

namespace schro {

/// Diagonal-norm summation-by-parts first-derivative operator bound to a grid
/// (interface representation). The stored coefficients are dimensionless; an
/// application divides by dx. The left closure block covers the first
/// closure_rows() rows; the right end uses its point reflection negated.
///
/// Defining property, with Q = H D dx and H = dx diag(sigma):
///   <u, Dv> + <Du, v> = conj(u_N) v_N - conj(u_0) v_0
/// exactly in the coefficients (to round-off in double).
struct SbpOperator {
    int interior_order = 0;  ///< 2, 4, 6, or 8
    int boundary_order = 0;  ///< interior_order / 2
    std::vector<double> interior_stencil;  ///< a_1..a_p; row j holds +-a_m at j+-m
    std::vector<std::vector<double>> boundary_closure;  ///< 2p rows of 3p columns
    std::vector<double> sigma_head;  ///< first 2p norm weights; interior weight is 1
    GridCircle grid;

    int closure_rows() const { return static_cast<int>(boundary_closure.size()); }
    int closure_cols() const {
        return boundary_closure.empty() ? 0 : static_cast<int>(boundary_closure[0].size());
    }

    /// Norm weight at point j (head, 1 in the interior, mirrored tail).
    double sigma(int j) const {
        const int r = closure_rows();
        const int n = grid.n_intervals;
        if (j < r) return sigma_head[static_cast<size_t>(j)];
        if (j > n - r) return sigma_head[static_cast<size_t>(n - j)];
        return 1.0;
    }
};

/// Centered antisymmetric stencil with wraparound indexing (periodic
/// representation).
struct PeriodicStencil {
    int order = 0;                  ///< 2, 4, 6, or 8
    std::vector<double> coeffs;     ///< a_1..a_{order/2}
    GridCircle grid;
};

/// Builds the (q, q/2) diagonal-norm operator for q in {2, 4, 6, 8}.
/// Throws ConfigError for unsupported orders or grids smaller than twice the
/// closure width.
SbpOperator make_sbp_operator(int interior_order, const GridCircle& grid);

/// Builds the centered periodic stencil of the given even order.
PeriodicStencil make_periodic_stencil(int order, const GridCircle& grid);

/// First derivative, interface representation. Throws UsageError on
/// representation or length mismatch.
WaveFunction apply_d(const SbpOperator& op, const WaveFunction& u);
void apply_d(const SbpOperator& op, const WaveFunction& u, WaveFunction& out);

/// D applied twice (the scheme's second derivative; keeps the boundary terms
/// of the first-derivative identity).
WaveFunction apply_d_twice(const SbpOperator& op, const WaveFunction& u);
void apply_d_twice(const SbpOperator& op, const WaveFunction& u, WaveFunction& out);

/// dx * sum_j sigma_j conj(u_j) v_j, accumulated in extended precision.
/// Conjugate-symmetric, positive-definite for u = v.
std::complex<double> weighted_inner(const SbpOperator& op, const WaveFunction& u,
                                    const WaveFunction& v);

/// |<u,Dv> + <Du,v> - (conj(u_N) v_N - conj(u_0) v_0)| (absolute residual).
double verify_sbp_identity(const SbpOperator& op, const WaveFunction& u,
                           const WaveFunction& v);

/// First derivative, periodic representation with wraparound.
WaveFunction apply_periodic_d(const PeriodicStencil& st, const WaveFunction& u);
void apply_periodic_d(const PeriodicStencil& st, const WaveFunction& u,
                      WaveFunction& out);

/// Plain-text dump of the coefficient tables (one stencil row per line).
void dump_coefficient_tables(const SbpOperator& op, std::ostream& os);

}  // namespace schro

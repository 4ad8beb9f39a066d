#pragma once

// Internal stencil kernels shared by sbp.cpp and scheme.cpp, templated on the
// real type so the energy/anti-Hermiticity diagnostics can run the identical
// formulas in extended precision (the cancellations they certify sit below
// double round-off for the large interaction factors).

#include <complex>
#include <vector>

#include "schro/sbp.hpp"

namespace schro::detail {

/// First derivative on the interface representation: closure rows at the left
/// end, centered stencil inside, negated reflection at the right end.
template <class R>
void kernel_apply_d(const SbpOperator& op, const std::complex<R>* u,
                    std::complex<R>* out) {
    const int n = op.grid.n_intervals;
    const int r = op.closure_rows();
    const int w = op.closure_cols();
    const int p = static_cast<int>(op.interior_stencil.size());
    const R inv_dx = R(1) / static_cast<R>(op.grid.dx);

    for (int i = 0; i < r; ++i) {
        const auto& row = op.boundary_closure[static_cast<size_t>(i)];
        std::complex<R> acc_left(0, 0), acc_right(0, 0);
        for (int j = 0; j < w; ++j) {
            const R c = static_cast<R>(row[static_cast<size_t>(j)]);
            acc_left += c * u[j];
            acc_right += c * u[n - j];
        }
        out[i] = acc_left * inv_dx;
        out[n - i] = -acc_right * inv_dx;
    }
    for (int i = r; i <= n - r; ++i) {
        std::complex<R> acc(0, 0);
        for (int m = 1; m <= p; ++m) {
            const R a = static_cast<R>(op.interior_stencil[static_cast<size_t>(m - 1)]);
            acc += a * (u[i + m] - u[i - m]);
        }
        out[i] = acc * inv_dx;
    }
}

/// Centered first derivative with wraparound on the periodic representation.
template <class R>
void kernel_apply_periodic_d(const PeriodicStencil& st, const std::complex<R>* u,
                             std::complex<R>* out) {
    const int n = st.grid.n_intervals;
    const int p = static_cast<int>(st.coeffs.size());
    const R inv_dx = R(1) / static_cast<R>(st.grid.dx);

    for (int j = 0; j < n; ++j) {
        std::complex<R> acc(0, 0);
        for (int m = 1; m <= p; ++m) {
            const R a = static_cast<R>(st.coeffs[static_cast<size_t>(m - 1)]);
            const int jp = j + m < n ? j + m : j + m - n;
            const int jm = j - m >= 0 ? j - m : j - m + n;
            acc += a * (u[jp] - u[jm]);
        }
        out[j] = acc * inv_dx;
    }
}

/// dx * sum_j sigma_j conj(u_j) v_j accumulated in long double.
template <class R>
std::complex<long double> kernel_weighted_inner(const SbpOperator& op,
                                                const std::complex<R>* u,
                                                const std::complex<R>* v) {
    const int n = op.grid.n_intervals;
    long double re = 0.0L, im = 0.0L;
    for (int j = 0; j <= n; ++j) {
        const long double s = static_cast<long double>(op.sigma(j));
        const std::complex<long double> uj(u[j].real(), u[j].imag());
        const std::complex<long double> vj(v[j].real(), v[j].imag());
        const std::complex<long double> term = std::conj(uj) * vj;
        re += s * term.real();
        im += s * term.imag();
    }
    const long double dx = static_cast<long double>(op.grid.dx);
    return {dx * re, dx * im};
}

}  // namespace schro::detail

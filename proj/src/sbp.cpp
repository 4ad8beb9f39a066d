#include "schro/sbp.hpp"

#include <ostream>

#include "kernels_impl.hpp"

namespace schro {

namespace {

#include "sbp_tables.inc"

template <int R, int W>
SbpOperator from_tables(const double (&sigma)[R], const double (&interior)[R / 2],
                        const double (&closure)[R][W]) {
    SbpOperator op;
    op.sigma_head.assign(sigma, sigma + R);
    op.interior_stencil.assign(interior, interior + R / 2);
    op.boundary_closure.resize(R);
    for (int i = 0; i < R; ++i) {
        op.boundary_closure[static_cast<size_t>(i)].assign(closure[i], closure[i] + W);
    }
    return op;
}

void check_interface(const SbpOperator& op, const WaveFunction& u, const char* what) {
    if (u.rep != Representation::interface) {
        throw UsageError(std::string(what) + " requires the interface representation");
    }
    if (u.size() != op.grid.n_intervals + 1) {
        throw UsageError(std::string(what) + ": state has " + std::to_string(u.size()) +
                         " values, operator grid expects " +
                         std::to_string(op.grid.n_intervals + 1));
    }
}

}  // namespace

SbpOperator make_sbp_operator(int interior_order, const GridCircle& grid) {
    SbpOperator op;
    switch (interior_order) {
        case 2: op = from_tables(kSigma2, kInterior2, kClosure2); break;
        case 4: op = from_tables(kSigma4, kInterior4, kClosure4); break;
        case 6: op = from_tables(kSigma6, kInterior6, kClosure6); break;
        case 8: op = from_tables(kSigma8, kInterior8, kClosure8); break;
        default:
            throw ConfigError("unsupported operator order " +
                              std::to_string(interior_order) + " (use 2, 4, 6, or 8)");
    }
    op.interior_order = interior_order;
    op.boundary_order = interior_order / 2;
    if (grid.n_intervals < 2 * op.closure_rows()) {
        throw ConfigError("grid with " + std::to_string(grid.n_intervals) +
                          " intervals is too small for the order-" +
                          std::to_string(interior_order) + " closure (needs >= " +
                          std::to_string(2 * op.closure_rows()) + ")");
    }
    op.grid = grid;
    return op;
}

PeriodicStencil make_periodic_stencil(int order, const GridCircle& grid) {
    PeriodicStencil st;
    switch (order) {
        case 2: st.coeffs.assign(kInterior2, kInterior2 + 1); break;
        case 4: st.coeffs.assign(kInterior4, kInterior4 + 2); break;
        case 6: st.coeffs.assign(kInterior6, kInterior6 + 3); break;
        case 8: st.coeffs.assign(kInterior8, kInterior8 + 4); break;
        default:
            throw ConfigError("unsupported stencil order " + std::to_string(order) +
                              " (use 2, 4, 6, or 8)");
    }
    st.order = order;
    if (grid.n_intervals < 2 * static_cast<int>(st.coeffs.size()) + 1) {
        throw ConfigError("grid too small for the order-" + std::to_string(order) +
                          " periodic stencil");
    }
    st.grid = grid;
    return st;
}

void apply_d(const SbpOperator& op, const WaveFunction& u, WaveFunction& out) {
    check_interface(op, u, "apply_d");
    out.rep = Representation::interface;
    out.values.resize(u.values.size());
    detail::kernel_apply_d<double>(op, u.values.data(), out.values.data());
}

WaveFunction apply_d(const SbpOperator& op, const WaveFunction& u) {
    WaveFunction out;
    apply_d(op, u, out);
    return out;
}

void apply_d_twice(const SbpOperator& op, const WaveFunction& u, WaveFunction& out) {
    WaveFunction mid;
    apply_d(op, u, mid);
    apply_d(op, mid, out);
}

WaveFunction apply_d_twice(const SbpOperator& op, const WaveFunction& u) {
    WaveFunction out;
    apply_d_twice(op, u, out);
    return out;
}

std::complex<double> weighted_inner(const SbpOperator& op, const WaveFunction& u,
                                    const WaveFunction& v) {
    check_interface(op, u, "weighted_inner");
    check_interface(op, v, "weighted_inner");
    const auto acc =
        detail::kernel_weighted_inner<double>(op, u.values.data(), v.values.data());
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double verify_sbp_identity(const SbpOperator& op, const WaveFunction& u,
                           const WaveFunction& v) {
    check_interface(op, u, "verify_sbp_identity");
    check_interface(op, v, "verify_sbp_identity");
    const WaveFunction du = apply_d(op, u);
    const WaveFunction dv = apply_d(op, v);
    const auto lhs1 =
        detail::kernel_weighted_inner<double>(op, u.values.data(), dv.values.data());
    const auto lhs2 =
        detail::kernel_weighted_inner<double>(op, du.values.data(), v.values.data());
    const int n = op.grid.n_intervals;
    const std::complex<long double> un(u[n].real(), u[n].imag());
    const std::complex<long double> u0(u[0].real(), u[0].imag());
    const std::complex<long double> vn(v[n].real(), v[n].imag());
    const std::complex<long double> v0(v[0].real(), v[0].imag());
    const std::complex<long double> boundary = std::conj(un) * vn - std::conj(u0) * v0;
    return static_cast<double>(std::abs(lhs1 + lhs2 - boundary));
}

void apply_periodic_d(const PeriodicStencil& st, const WaveFunction& u,
                      WaveFunction& out) {
    if (u.rep != Representation::periodic) {
        throw UsageError("apply_periodic_d requires the periodic representation");
    }
    if (u.size() != st.grid.n_intervals) {
        throw UsageError("apply_periodic_d: state has " + std::to_string(u.size()) +
                         " values, stencil grid expects " +
                         std::to_string(st.grid.n_intervals));
    }
    out.rep = Representation::periodic;
    out.values.resize(u.values.size());
    detail::kernel_apply_periodic_d<double>(st, u.values.data(), out.values.data());
}

WaveFunction apply_periodic_d(const PeriodicStencil& st, const WaveFunction& u) {
    WaveFunction out;
    apply_periodic_d(st, u, out);
    return out;
}

void dump_coefficient_tables(const SbpOperator& op, std::ostream& os) {
    os << "operator (" << op.interior_order << "," << op.boundary_order << ")\n";
    os << "sigma";
    for (double s : op.sigma_head) os << ' ' << s;
    os << "\ninterior";
    for (double a : op.interior_stencil) os << ' ' << a;
    os << '\n';
    for (int i = 0; i < op.closure_rows(); ++i) {
        os << "closure_row " << i;
        for (double c : op.boundary_closure[static_cast<size_t>(i)]) os << ' ' << c;
        os << '\n';
    }
}

}  // namespace schro

/**
 * @file solver.hpp
 * @brief Collocation scheme for Burgers' equation on the exponential cubic
 *        B-spline basis: initial coefficient fit, Crank-Nicolson step with
 *        the Rubin-Graves linearization of U*U_x, Dirichlet boundary
 *        elimination of the two exterior coefficients, and the march driver.
 *
 * The spline approximation is U_N(x,t) = sum_{i=-1}^{N+1} d_i(t) B_i(x) over
 * knots x_i = a + i*h.  Collocating at the N+1 mesh nodes and eliminating
 * d_{-1}, d_{N+1} through the boundary values yields one tridiagonal solve
 * per time step.
 */

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "expb/basis.hpp"
#include "expb/problem.hpp"
#include "expb/tridiagonal.hpp"
#include "expb/types.hpp"

namespace expb {

/// Spline coefficients at one time level.  delta[k] stores d_{k-1}, so the
/// vector runs d_{-1}, d_0, ..., d_{N+1} and has length N+3.
template <typename Scalar = double>
struct CoefficientVector {
    Vector<Scalar> delta;
    Scalar t{};

    Eigen::Index n_intervals() const { return delta.size() - 3; }
};

/// Nodal values of the spline and its first two derivatives (length N+1).
template <typename Scalar = double>
struct NodalState {
    Vector<Scalar> u, ux, uxx;
};

/// One recorded state of a march.
template <typename Scalar = double>
struct Snapshot {
    Scalar t{};
    NodalState<Scalar> state;
    CoefficientVector<Scalar> coeffs;
};

/// A time step failed; carries the step index and the time it started from.
class solver_error : public std::runtime_error {
public:
    solver_error(long step_index, double t_value, const std::string& what_arg)
        : std::runtime_error(what_arg), step(step_index), t(t_value) {}
    long step;
    double t;
};

/// Contracts a coefficient vector into nodal values via the stencil weights.
template <typename Scalar>
NodalState<Scalar> nodal_state(const CoefficientVector<Scalar>& cv,
                               const BasisStencil<Scalar>& st) {
    const Eigen::Index m = cv.delta.size() - 2;  // N+1 nodes
    const auto dm = cv.delta.segment(0, m);
    const auto dc = cv.delta.segment(1, m);
    const auto dp = cv.delta.segment(2, m);
    NodalState<Scalar> ns;
    ns.u = st.alpha1 * dm + st.alpha2 * dc + st.alpha3 * dp;
    ns.ux = st.beta1 * dm + st.beta2 * dp;
    ns.uxx = st.gamma1 * dm + st.gamma2 * dc + st.gamma3 * dp;
    return ns;
}

/// Evaluates the spline (or a derivative) anywhere in the domain.
template <typename Scalar>
Scalar eval_spline(const CoefficientVector<Scalar>& cv, const BasisParams<Scalar>& bp,
                   Scalar a, Scalar x, int deriv = 0) {
    const long n = static_cast<long>(cv.n_intervals());
    long j = static_cast<long>(std::floor((x - a) / bp.h));
    j = std::max(0L, std::min(j, n - 1));
    Scalar sum(0);
    for (long i = j - 1; i <= j + 2; ++i) {
        if (i < -1 || i > n + 1) continue;
        sum += cv.delta[i + 1] * eval_basis(bp, i, x, deriv, a);
    }
    return sum;
}

/// Fits the initial coefficients from the initial data: interpolation at all
/// N+1 nodes plus the two end-slope conditions, reduced to one tridiagonal
/// solve by eliminating d_{-1} and d_{N+1} from the first and last rows.
template <typename Scalar>
CoefficientVector<Scalar> fit_initial(const ProblemSpec<Scalar>& ps,
                                      const Discretization<Scalar>& disc) {
    validate_setup(ps, disc);
    const Eigen::Index n = disc.n;
    const Scalar h = (ps.b - ps.a) / Scalar(n);
    const BasisStencil<Scalar> st = stencil(make_basis(disc.p, h));

    Scalar d0, dn;
    if (ps.initial_deriv) {
        d0 = ps.initial_deriv(ps.a);
        dn = ps.initial_deriv(ps.b);
    } else {
        const Scalar e = h / Scalar(100);
        d0 = (ps.initial(ps.a + e) - ps.initial(ps.a - e)) / (Scalar(2) * e);
        dn = (ps.initial(ps.b + e) - ps.initial(ps.b - e)) / (Scalar(2) * e);
    }

    TridiagonalSystem<Scalar> sys;
    sys.sub.resize(n);
    sys.sup.resize(n);
    sys.diag.resize(n + 1);
    sys.rhs.resize(n + 1);
    for (Eigen::Index m = 1; m < n; ++m) {
        sys.sub[m - 1] = st.alpha1;
        sys.diag[m] = st.alpha2;
        sys.sup[m] = st.alpha3;
        sys.rhs[m] = ps.initial(ps.a + Scalar(m) * h);
    }
    // first/last interpolation rows with the slope conditions substituted
    sys.diag[0] = st.alpha2;
    sys.sup[0] = st.alpha3 - st.alpha1 * st.beta2 / st.beta1;
    sys.rhs[0] = ps.initial(ps.a) - st.alpha1 / st.beta1 * d0;
    sys.sub[n - 1] = st.alpha1 - st.alpha3 * st.beta1 / st.beta2;
    sys.diag[n] = st.alpha2;
    sys.rhs[n] = ps.initial(ps.b) - st.alpha3 / st.beta2 * dn;

    const Vector<Scalar> sol = thomas_solve(sys);

    CoefficientVector<Scalar> cv;
    cv.t = ps.t_start;
    cv.delta.resize(n + 3);
    cv.delta.segment(1, n + 1) = sol;
    cv.delta[0] = (d0 - st.beta2 * sol[1]) / st.beta1;
    cv.delta[n + 2] = (dn - st.beta1 * sol[n - 1]) / st.beta2;
    return cv;
}

/// Assembles the linearized Crank-Nicolson system for one step to t_next.
///
/// Row m couples d_{m-1}, d_m, d_{m+1} at the new level with left-hand
/// coefficients alpha_k + dt/2*(alpha_k*L2 + beta_k*L1 - lambda*gamma_k)
/// where L1 = U_m^n and L2 = (U_x)_m^n (the beta term is absent in the
/// center column, whose beta weight is zero).  The right-hand side is
/// (alpha_k + lambda*dt/2*gamma_k) contracted with the old coefficients.
/// Rows 0 and N are reduced by eliminating d_{-1} and d_{N+1} through the
/// Dirichlet values at t_next.
template <typename Scalar>
TridiagonalSystem<Scalar> assemble_step(const CoefficientVector<Scalar>& cv,
                                        const NodalState<Scalar>& ns,
                                        const BasisStencil<Scalar>& st,
                                        const ProblemSpec<Scalar>& ps,
                                        const Discretization<Scalar>& disc,
                                        Scalar t_next) {
    const Eigen::Index n = cv.delta.size() - 3;
    const Scalar ht = disc.dt / Scalar(2);
    const Scalar lam = ps.lambda;

    TridiagonalSystem<Scalar> sys;
    sys.sub.resize(n);
    sys.sup.resize(n);
    sys.diag.resize(n + 1);
    sys.rhs.resize(n + 1);

    const Scalar ra = st.alpha1 + lam * ht * st.gamma1;
    const Scalar rb = st.alpha2 + lam * ht * st.gamma2;
    const Scalar rc = st.alpha3 + lam * ht * st.gamma3;

    for (Eigen::Index m = 0; m <= n; ++m) {
        const Scalar l1 = ns.u[m];
        const Scalar l2 = ns.ux[m];
        const Scalar ca = st.alpha1 + ht * (st.alpha1 * l2 + st.beta1 * l1 - lam * st.gamma1);
        const Scalar cb = st.alpha2 + ht * (st.alpha2 * l2 - lam * st.gamma2);
        const Scalar cc = st.alpha3 + ht * (st.alpha3 * l2 + st.beta2 * l1 - lam * st.gamma3);
        sys.diag[m] = cb;
        sys.rhs[m] = ra * cv.delta[m] + rb * cv.delta[m + 1] + rc * cv.delta[m + 2];
        if (m == 0) {
            const Scalar s1 = ps.bc_left(t_next);
            sys.diag[0] = cb - ca * st.alpha2 / st.alpha1;
            sys.sup[0] = cc - ca * st.alpha3 / st.alpha1;
            sys.rhs[0] -= ca * s1 / st.alpha1;
        } else if (m == n) {
            const Scalar s2 = ps.bc_right(t_next);
            sys.sub[n - 1] = ca - cc * st.alpha1 / st.alpha3;
            sys.diag[n] = cb - cc * st.alpha2 / st.alpha3;
            sys.rhs[n] -= cc * s2 / st.alpha3;
        } else {
            sys.sub[m - 1] = ca;
            sys.sup[m] = cc;
        }
    }
    return sys;
}

/// Advances the coefficients by one time step: Thomas solve of the
/// assembled system, then back substitution of d_{-1} and d_{N+1} from the
/// boundary identities.
template <typename Scalar>
CoefficientVector<Scalar> step(const CoefficientVector<Scalar>& cv,
                               const BasisStencil<Scalar>& st,
                               const ProblemSpec<Scalar>& ps,
                               const Discretization<Scalar>& disc) {
    const Scalar t_next = cv.t + disc.dt;
    const NodalState<Scalar> ns = nodal_state(cv, st);
    const TridiagonalSystem<Scalar> sys = assemble_step(cv, ns, st, ps, disc, t_next);
    const Vector<Scalar> sol = thomas_solve(sys);

    const Eigen::Index n = cv.delta.size() - 3;
    CoefficientVector<Scalar> out;
    out.t = t_next;
    out.delta.resize(n + 3);
    out.delta.segment(1, n + 1) = sol;
    const Scalar s1 = ps.bc_left(t_next);
    const Scalar s2 = ps.bc_right(t_next);
    out.delta[0] = (s1 - st.alpha2 * sol[0] - st.alpha3 * sol[1]) / st.alpha1;
    out.delta[n + 2] = (s2 - st.alpha1 * sol[n - 1] - st.alpha2 * sol[n]) / st.alpha3;
    return out;
}

/// Marches from t_start with fixed dt, recording a snapshot at the first
/// step whose time reaches each requested time (times equal within rounding
/// count as reached).  Requested times must be ascending and >= t_start; the
/// returned times are the actual step times.
template <typename Scalar>
std::vector<Snapshot<Scalar>> run(const ProblemSpec<Scalar>& ps,
                                  const Discretization<Scalar>& disc,
                                  const std::vector<Scalar>& snapshot_times) {
    validate_setup(ps, disc);
    for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
        if (snapshot_times[i] < ps.t_start ||
            (i > 0 && snapshot_times[i] < snapshot_times[i - 1]))
            throw std::invalid_argument(
                "run: snapshot times must be ascending and >= t_start");
    }

    const Scalar h = (ps.b - ps.a) / Scalar(disc.n);
    const BasisStencil<Scalar> st = stencil(make_basis(disc.p, h));
    CoefficientVector<Scalar> cv = fit_initial(ps, disc);

    std::vector<Snapshot<Scalar>> out;
    out.reserve(snapshot_times.size());
    const Scalar eps = disc.dt * Scalar(1e-9);
    long k = 0;
    for (const Scalar target : snapshot_times) {
        while (cv.t < target - eps) {
            try {
                cv = step(cv, st, ps, disc);
            } catch (const std::exception& e) {
                throw solver_error(k, static_cast<double>(cv.t),
                                   "run: step " + std::to_string(k) + " at t = " +
                                       std::to_string(static_cast<double>(cv.t)) +
                                       " failed: " + e.what());
            }
            ++k;
            cv.t = ps.t_start + Scalar(k) * disc.dt;  // keep step times drift-free
        }
        out.push_back({cv.t, nodal_state(cv, st), cv});
    }
    return out;
}

}  // namespace expb

/**
 * @file problem.hpp
 * @brief Burgers' problem setup: domain, viscosity, initial data, Dirichlet
 *        boundaries, optional exact solution, plus the four built-in test
 *        problems matching the exact solutions in exact.hpp.
 */

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "expb/exact.hpp"

namespace expb {

/// One initial-boundary-value problem for U_t + U*U_x - lambda*U_xx = 0 on
/// [a, b] with Dirichlet data U(a,t) = bc_left(t), U(b,t) = bc_right(t).
///
/// initial_deriv and exact are optional.  When initial_deriv is absent the
/// initial fit falls back to centered differences of the initial data with
/// step h/100 for the two end-slope conditions.
template <typename Scalar = double>
struct ProblemSpec {
    Scalar a{}, b{};                               ///< domain endpoints, a < b
    Scalar lambda{};                               ///< viscosity (= 1/Re), > 0
    Scalar t_start{};                              ///< time of the initial data
    std::function<Scalar(Scalar)> initial;         ///< x -> U(x, t_start)
    std::function<Scalar(Scalar)> initial_deriv;   ///< x -> U_x(x, t_start), optional
    std::function<Scalar(Scalar)> bc_left;         ///< t -> U(a, t)
    std::function<Scalar(Scalar)> bc_right;        ///< t -> U(b, t)
    std::function<Scalar(Scalar, Scalar)> exact;   ///< (x, t) -> U, optional
};

/// Mesh and march parameters.
template <typename Scalar = double>
struct Discretization {
    int n{};       ///< number of mesh intervals N (>= 4); h = (b-a)/N
    Scalar dt{};   ///< time step (> 0)
    Scalar p{};    ///< basis tension parameter (> 0)
};

template <typename Scalar>
void validate_setup(const ProblemSpec<Scalar>& ps, const Discretization<Scalar>& disc) {
    if (!(ps.a < ps.b)) throw std::invalid_argument("problem: requires a < b");
    if (!(ps.lambda > Scalar(0)))
        throw std::invalid_argument("problem: requires lambda > 0");
    if (!ps.initial || !ps.bc_left || !ps.bc_right)
        throw std::invalid_argument("problem: initial and boundary functions required");
    if (disc.n < 4) throw std::invalid_argument("discretization: requires N >= 4");
    if (!(disc.dt > Scalar(0)))
        throw std::invalid_argument("discretization: requires dt > 0");
    if (!(disc.p > Scalar(0)))
        throw std::invalid_argument("discretization: requires p > 0");
}

/// Decaying sine disturbance on [0,1]: U(x,0) = sin(pi x), U(0,t) = U(1,t) = 0.
/// The series oracle is attached for lambda >= 0.01 only; below that it is
/// impractical and the problem runs without an exact column.
template <typename Scalar = double>
ProblemSpec<Scalar> problem_a(Scalar lambda) {
    const Scalar pi = std::numbers::pi_v<Scalar>;
    ProblemSpec<Scalar> ps;
    ps.a = Scalar(0);
    ps.b = Scalar(1);
    ps.lambda = lambda;
    ps.t_start = Scalar(0);
    ps.initial = [pi](Scalar x) { return std::sin(pi * x); };
    ps.initial_deriv = [pi](Scalar x) { return pi * std::cos(pi * x); };
    ps.bc_left = [](Scalar) { return Scalar(0); };
    ps.bc_right = [](Scalar) { return Scalar(0); };
    if (lambda >= Scalar(0.01)) {
        ps.exact = [lambda, pi](Scalar x, Scalar t) {
            return t > Scalar(0) ? exact_a(x, t, lambda) : std::sin(pi * x);
        };
    }
    return ps;
}

/// Propagating shock on [0,1]: the initial state is the shock profile at
/// t = 1 and the march starts there; both boundary values are zero.
template <typename Scalar = double>
ProblemSpec<Scalar> problem_b(Scalar lambda) {
    ProblemSpec<Scalar> ps;
    ps.a = Scalar(0);
    ps.b = Scalar(1);
    ps.lambda = lambda;
    ps.t_start = Scalar(1);
    ps.initial = [lambda](Scalar x) { return exact_b(x, Scalar(1), lambda); };
    ps.initial_deriv = [lambda](Scalar x) {
        // d/dx of (x/t)/(1+e^lg) at t = 1, with lg as in exact_b
        const Scalar t(1);
        const Scalar lg = std::log(t) / Scalar(2) - Scalar(1) / (Scalar(16) * lambda) +
                          x * x / (Scalar(4) * lambda * t);
        const Scalar q = std::exp(-std::abs(lg));
        const Scalar s1 = lg >= Scalar(0) ? q / (Scalar(1) + q)
                                          : Scalar(1) / (Scalar(1) + std::exp(lg));
        const Scalar s2 = q / ((Scalar(1) + q) * (Scalar(1) + q));  // e^lg/(1+e^lg)^2
        return (s1 - x * x / (Scalar(2) * lambda * t) * s2) / t;
    };
    ps.bc_left = [](Scalar) { return Scalar(0); };
    ps.bc_right = [](Scalar) { return Scalar(0); };
    ps.exact = [lambda](Scalar x, Scalar t) { return exact_b(x, t, lambda); };
    return ps;
}

/// Travelling wave front on [0,1] with Dirichlet plateau boundaries
/// U(0,t) = mu + alpha, U(1,t) = mu - alpha.
template <typename Scalar = double>
ProblemSpec<Scalar> problem_c(Scalar lambda,
                              WaveParams<Scalar> w = {Scalar(0.4), Scalar(0.6),
                                                      Scalar(0.125)}) {
    if (w.wave_alpha == Scalar(0))
        throw std::domain_error("problem_c: wave_alpha must be nonzero");
    ProblemSpec<Scalar> ps;
    ps.a = Scalar(0);
    ps.b = Scalar(1);
    ps.lambda = lambda;
    ps.t_start = Scalar(0);
    ps.initial = [lambda, w](Scalar x) { return exact_c(x, Scalar(0), lambda, w); };
    ps.initial_deriv = [lambda, w](Scalar x) {
        return exact_c_dx(x, Scalar(0), lambda, w);
    };
    ps.bc_left = [w](Scalar) { return w.wave_mu + w.wave_alpha; };
    ps.bc_right = [w](Scalar) { return w.wave_mu - w.wave_alpha; };
    ps.exact = [lambda, w](Scalar x, Scalar t) { return exact_c(x, t, lambda, w); };
    return ps;
}

/// Tan-form solution on [0.5, 1.5] with time-dependent Dirichlet data taken
/// from the exact solution at both ends.
template <typename Scalar = double>
ProblemSpec<Scalar> problem_d(Scalar lambda) {
    ProblemSpec<Scalar> ps;
    ps.a = Scalar(0.5);
    ps.b = Scalar(1.5);
    ps.lambda = lambda;
    ps.t_start = Scalar(0);
    ps.initial = [lambda](Scalar x) {
        return lambda * (x + std::tan(x / Scalar(2)));
    };
    ps.initial_deriv = [lambda](Scalar x) {
        const Scalar c = std::cos(x / Scalar(2));
        return lambda * (Scalar(1) + Scalar(0.5) / (c * c));
    };
    ps.bc_left = [lambda](Scalar t) { return exact_d(Scalar(0.5), t, lambda); };
    ps.bc_right = [lambda](Scalar t) { return exact_d(Scalar(1.5), t, lambda); };
    ps.exact = [lambda](Scalar x, Scalar t) { return exact_d(x, t, lambda); };
    return ps;
}

}  // namespace expb

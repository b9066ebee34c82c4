/**
 * @file exact.hpp
 * @brief Closed-form reference solutions of the viscous Burgers' equation
 *        U_t + U*U_x - lambda*U_xx = 0, plus the error norms used to compare
 *        numerical profiles against them.
 *
 * Four families are provided:
 *   exact_a  decaying sine disturbance on [0,1] (Fourier/Bessel series)
 *   exact_b  propagating shock on [0,1] for t >= 1
 *   exact_c  travelling wave front between plateaus mu+alpha and mu-alpha
 *   exact_d  tan-form solution on a shifted interval
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "expb/types.hpp"

namespace expb {

/// A series failed to reach its truncation threshold within the term budget.
class convergence_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Modified Bessel function I_n(z) by power series,
///   I_n(z) = sum_k (z/2)^{2k+n} / (k! (k+n)!),
/// truncated once a term falls below 1e-17 of the partial sum.
/// Valid for 0 <= n <= 500 and 0 <= z <= 100 (relative error <= 1e-12).
template <typename Scalar>
Scalar bessel_i(int n, Scalar z) {
    if (n < 0 || n > 500)
        throw std::domain_error("bessel_i: order must be in [0, 500]");
    if (!(z >= Scalar(0)) || z > Scalar(100))
        throw std::domain_error("bessel_i: argument must be in [0, 100]");
    if (z == Scalar(0)) return n == 0 ? Scalar(1) : Scalar(0);

    const Scalar zh = z / Scalar(2);
    Scalar term(1);
    for (int k = 1; k <= n; ++k) term *= zh / Scalar(k);   // (z/2)^n / n!
    if (term == Scalar(0)) return Scalar(0);               // high order underflows
    Scalar sum = term;
    for (int k = 1; k < 2000; ++k) {
        term *= zh * zh / (Scalar(k) * Scalar(k + n));
        sum += term;
        if (term < Scalar(1e-17) * sum) return sum;
    }
    throw convergence_error("bessel_i: series did not converge");
}

/// Ratios I_j(z)/I_0(z) for j = 0..jmax.  Backward (Miller) recurrence keeps
/// the table stable for large z where the forward recurrence blows up.
template <typename Scalar>
std::vector<Scalar> bessel_i_ratios(int jmax, Scalar z) {
    if (jmax < 0) throw std::domain_error("bessel_i_ratios: jmax must be >= 0");
    std::vector<Scalar> r(static_cast<std::size_t>(jmax) + 1, Scalar(0));
    r[0] = Scalar(1);
    if (jmax == 0 || z == Scalar(0)) return r;

    if (z <= Scalar(5)) {
        const Scalar i0 = bessel_i(0, z);
        for (int j = 1; j <= jmax; ++j) r[j] = bessel_i(j, z) / i0;
        return r;
    }

    const int base = std::max(jmax, static_cast<int>(std::ceil(z)));
    const int start = base + 15 + static_cast<int>(std::ceil(2 * std::sqrt(Scalar(base))));
    Scalar fp = Scalar(0);   // f_{j+1}
    Scalar fc = Scalar(1);   // f_j, arbitrary seed; only ratios survive
    std::vector<Scalar> f(static_cast<std::size_t>(jmax) + 1, Scalar(0));
    for (int j = start; j >= 1; --j) {
        const Scalar fm = fp + (Scalar(2 * j) / z) * fc;
        fp = fc;
        fc = fm;
        if (j - 1 <= jmax) f[j - 1] = fc;
        if (std::abs(fc) > Scalar(1e250)) {
            fc *= Scalar(1e-250);
            fp *= Scalar(1e-250);
            for (auto& v : f) v *= Scalar(1e-250);
        }
    }
    for (int j = jmax; j >= 0; --j) r[j] = f[j] / f[0];
    return r;
}

/// Series solution for the decaying sine disturbance (problem a):
/// initial data sin(pi x) on [0,1] with homogeneous Dirichlet boundaries,
///
///            4 pi lambda sum_j j I_j sin(j pi x) E_j
///   U(x,t) = ---------------------------------------,  E_j = exp(-j^2 pi^2 lambda t)
///            I_0 + 2 sum_j I_j cos(j pi x) E_j
///
/// with I_j = I_j(1/(2 pi lambda)).  Both series are scaled by I_0 term by
/// term (ratio table), and truncated at the first j with E_j < 1e-30.
/// Requires t > 0 and lambda >= 0.01; below that the series converges too
/// slowly to be useful and a domain_error is raised.
template <typename Scalar>
Scalar exact_a(Scalar x, Scalar t, Scalar lambda) {
    if (!(t > Scalar(0))) throw std::domain_error("exact_a: requires t > 0");
    if (!(lambda >= Scalar(0.01)))
        throw std::domain_error("exact_a: requires lambda >= 0.01");

    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar decay = pi * pi * lambda * t;

    int jmax = 0;
    for (int j = 1; j <= 200; ++j) {
        if (std::exp(-Scalar(j) * Scalar(j) * decay) < Scalar(1e-30)) break;
        jmax = j;
        if (j == 200)
            throw convergence_error("exact_a: series needs more than 200 terms");
    }

    const Scalar z = Scalar(1) / (Scalar(2) * pi * lambda);
    const std::vector<Scalar> r = bessel_i_ratios(jmax, z);

    Scalar num(0), den(1);
    for (int j = 1; j <= jmax; ++j) {
        const Scalar ej = std::exp(-Scalar(j) * Scalar(j) * decay);
        num += Scalar(j) * r[j] * std::sin(Scalar(j) * pi * x) * ej;
        den += Scalar(2) * r[j] * std::cos(Scalar(j) * pi * x) * ej;
    }
    return Scalar(4) * pi * lambda * num / den;
}

/// Shock solution (problem b) for t >= 1, 0 <= x <= 1:
///
///   U(x,t) = (x/t) / (1 + sqrt(t/t0) exp(x^2/(4 lambda t))),  t0 = exp(1/(8 lambda)).
///
/// The divisor is evaluated in log space so small lambda cannot overflow.
template <typename Scalar>
Scalar exact_b(Scalar x, Scalar t, Scalar lambda) {
    const Scalar lg = std::log(t) / Scalar(2) - Scalar(1) / (Scalar(16) * lambda) +
                      x * x / (Scalar(4) * lambda * t);
    if (lg >= Scalar(0)) {
        const Scalar q = std::exp(-lg);
        return (x / t) * q / (Scalar(1) + q);
    }
    return (x / t) / (Scalar(1) + std::exp(lg));
}

/// Constants of the travelling wave solution.  Named wave_* to keep them
/// apart from the basis stencil constants.
template <typename Scalar = double>
struct WaveParams {
    Scalar wave_alpha;   ///< front steepness/amplitude, must be nonzero
    Scalar wave_mu;      ///< propagation speed
    Scalar wave_gamma;   ///< initial front position
};

/// Travelling wave (problem c):
///
///   U(x,t) = (alpha + mu + (mu - alpha) e^eta) / (1 + e^eta),
///   eta    = alpha (x - mu t - gamma) / lambda,
///
/// a logistic front moving right at speed mu between the plateaus
/// mu + alpha (eta -> -inf) and mu - alpha (eta -> +inf).  For eta > 0 the
/// form divided through by e^eta is used, so steep fronts cannot overflow.
template <typename Scalar>
Scalar exact_c(Scalar x, Scalar t, Scalar lambda, const WaveParams<Scalar>& w) {
    const Scalar eta = w.wave_alpha * (x - w.wave_mu * t - w.wave_gamma) / lambda;
    const Scalar lo = w.wave_mu - w.wave_alpha;
    const Scalar hi = w.wave_mu + w.wave_alpha;
    if (eta >= Scalar(0)) {
        const Scalar q = std::exp(-eta);
        return (hi * q + lo) / (q + Scalar(1));
    }
    const Scalar q = std::exp(eta);
    return (hi + lo * q) / (Scalar(1) + q);
}

/// Spatial derivative of exact_c, used for the initial end-slope conditions.
template <typename Scalar>
Scalar exact_c_dx(Scalar x, Scalar t, Scalar lambda, const WaveParams<Scalar>& w) {
    const Scalar eta = w.wave_alpha * (x - w.wave_mu * t - w.wave_gamma) / lambda;
    // e^eta / (1 + e^eta)^2 = 1 / ((1 + e^eta)(1 + e^-eta))
    const Scalar q = std::exp(-std::abs(eta));
    const Scalar logistic = q / ((Scalar(1) + q) * (Scalar(1) + q));
    return Scalar(-2) * w.wave_alpha * w.wave_alpha / lambda * logistic;
}

/// Tan-form solution (problem d):
///
///   U(x,t) = lambda/(1 + lambda t) * [x + tan(x / (2 (1 + lambda t)))].
///
/// Raises domain_error when the tan argument comes within 1e-6 of a pole.
template <typename Scalar>
Scalar exact_d(Scalar x, Scalar t, Scalar lambda) {
    const Scalar a = Scalar(1) + lambda * t;
    const Scalar arg = x / (Scalar(2) * a);
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (std::abs(std::remainder(arg - pi / Scalar(2), pi)) < Scalar(1e-6))
        throw std::domain_error("exact_d: tan argument within 1e-6 of a pole");
    return lambda / a * (x + std::tan(arg));
}

/// One mesh node of an error report.
template <typename Scalar = double>
struct NodeError {
    Scalar x, numeric, exact, abs_err;
};

/// Discrete error norms over the mesh nodes x_j = a + j*h:
///   l2   = sqrt(h sum_j (U_j - u_j)^2),   linf = max_j |U_j - u_j|.
template <typename Scalar = double>
struct ErrorReport {
    Scalar l2{}, linf{};
    std::vector<NodeError<Scalar>> per_node;
};

template <typename Scalar, typename ExactFn>
ErrorReport<Scalar> error_norms(const Vector<Scalar>& numeric, ExactFn&& exact,
                                Scalar a, Scalar h, Scalar t) {
    ErrorReport<Scalar> rep;
    rep.per_node.reserve(static_cast<std::size_t>(numeric.size()));
    Scalar sum(0);
    for (Eigen::Index j = 0; j < numeric.size(); ++j) {
        const Scalar x = a + Scalar(j) * h;
        const Scalar e = exact(x, t);
        const Scalar d = std::abs(numeric[j] - e);
        sum += d * d;
        rep.linf = std::max(rep.linf, d);
        rep.per_node.push_back({x, numeric[j], e, d});
    }
    rep.l2 = std::sqrt(h * sum);
    return rep;
}

}  // namespace expb

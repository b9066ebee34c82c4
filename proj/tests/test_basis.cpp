#include <doctest.h>

#include <cmath>
#include <random>

#include "expb/basis.hpp"

using expb::BasisParams;
using expb::BasisStencil;
using expb::eval_basis;
using expb::make_basis;
using expb::stencil;

namespace {

double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// Independent long-double evaluation of the coefficient closed forms.
struct CoeffOracle {
    long double a1, b1, b2, c1, d1, c, s;
    explicit CoeffOracle(long double p, long double h) {
        const long double ph = p * h;
        c = std::cosh(ph);
        s = std::sinh(ph);
        const long double pcs = ph * c - s;
        const long double co = 1.0L - c;
        a1 = ph * c / pcs;
        b1 = p / 2.0L * (c * (c - 1.0L) + s * s) / (pcs * co);
        b2 = p / (2.0L * pcs);
        c1 = (std::exp(-ph) * co + s * (std::exp(-ph) - 1.0L)) / (4.0L * pcs * co);
        d1 = (std::exp(ph) * (c - 1.0L) + s * (std::exp(ph) - 1.0L)) / (4.0L * pcs * co);
    }
};

}  // namespace

TEST_CASE("make_basis matches the closed-form coefficients") {
    const auto bp = make_basis(1.0, 0.025);
    const CoeffOracle ref(1.0L, 0.025L);
    CHECK(bp.c == doctest::Approx(std::cosh(0.025)).epsilon(1e-15));
    CHECK(bp.s == doctest::Approx(std::sinh(0.025)).epsilon(1e-15));
    CHECK(rel_err(bp.a1, static_cast<double>(ref.a1)) < 1e-13);
    CHECK(rel_err(bp.b1, static_cast<double>(ref.b1)) < 1e-13);
    CHECK(rel_err(bp.b2, static_cast<double>(ref.b2)) < 1e-13);
    CHECK(rel_err(bp.c1, static_cast<double>(ref.c1)) < 1e-13);
    CHECK(rel_err(bp.d1, static_cast<double>(ref.d1)) < 1e-13);
}

TEST_CASE("make_basis rejects out-of-range parameters") {
    CHECK_THROWS_AS(make_basis(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_basis(-1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(make_basis(0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(make_basis(600.0, 0.1), std::domain_error);   // p*h > 50
    CHECK_THROWS_AS(make_basis(1e-3, 1e-3), std::domain_error);   // p*h < 1e-4
}

TEST_CASE("cosh/sinh identity holds to a few ulps") {
    for (double ph : {1e-4, 0.01, 0.2, 1.0, 5.0, 20.0}) {
        const auto bp = make_basis(ph / 0.1, 0.1);
        const double lhs = bp.c * bp.c - bp.s * bp.s;
        const double scale = std::max(1.0, bp.c * bp.c);
        CHECK(std::abs(lhs - 1.0) <=
              8 * std::numeric_limits<double>::epsilon() * scale);
    }
}

TEST_CASE("stencil symmetries are exact") {
    const auto st = stencil(make_basis(2.3, 0.07));
    CHECK(st.alpha2 == 1.0);
    CHECK(st.alpha1 == st.alpha3);
    CHECK(st.beta1 == -st.beta2);
    CHECK(st.gamma1 == st.gamma3);
    CHECK(st.gamma1 + st.gamma2 + st.gamma3 == 0.0);
    CHECK(st.gamma1 > 0.0);
}

TEST_CASE("stencil approaches the cubic B-spline limit as p*h -> 0") {
    // p*h = 0.01; entries scaled by (1, h, h^2)
    const double h = 0.1;
    const auto st = stencil(make_basis(0.1, h));
    CHECK(rel_err(st.alpha1, 0.25) < 1e-4);
    CHECK(rel_err(st.alpha3, 0.25) < 1e-4);
    CHECK(st.alpha2 == 1.0);
    CHECK(rel_err(st.beta2 * h, 0.75) < 1e-3);
    CHECK(rel_err(st.beta1 * h, -0.75) < 1e-3);
    CHECK(rel_err(st.gamma1 * h * h, 1.5) < 1e-3);
    CHECK(rel_err(st.gamma2 * h * h, -3.0) < 1e-3);
    CHECK(rel_err(st.gamma3 * h * h, 1.5) < 1e-3);
}

TEST_CASE("eval_basis nodal values match the stencil constants") {
    const double p = 1.0, h = 0.2, origin = 0.3;
    const long i = 5;
    const auto bp = make_basis(p, h);
    const auto st = stencil(bp);
    const double xi = origin + i * h;

    CHECK(rel_err(eval_basis(bp, i, xi, 0, origin), 1.0) < 1e-14);
    CHECK(std::abs(eval_basis(bp, i, xi - 2 * h, 0, origin)) < 1e-15);
    CHECK(std::abs(eval_basis(bp, i, xi + 2 * h, 1, origin)) < 1e-15);
    CHECK(std::abs(eval_basis(bp, i, xi - 2 * h, 2, origin)) < 1e-15);
    CHECK(rel_err(eval_basis(bp, i, xi - h, 2, origin), st.gamma1) < 1e-13);
    CHECK(std::abs(eval_basis(bp, i, xi + 3 * h, 0, origin)) == 0.0);
    CHECK_THROWS_AS(eval_basis(bp, i, xi, 3, origin), std::invalid_argument);
}

TEST_CASE("nodal consistency between eval_basis and the stencil") {
    // The first-derivative stencil entries are the weights of d_{i-1}, d_{i+1}
    // in (U_x)_i; the basis itself has B'(x_{i-1}) = beta2, B'(x_{i+1}) = beta1.
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> pd(0.01, 10.0), hd(1e-3, 0.5);
    int tested = 0;
    while (tested < 20) {
        const double p = pd(rng), h = hd(rng);
        if (p * h < 2e-4) continue;  // constructor floor is 1e-4
        ++tested;
        const auto bp = make_basis(p, h);
        const auto st = stencil(bp);
        const long i = 3;
        const double origin = -0.7;
        const double xi = origin + i * h;

        const double b_ref[5] = {0.0, st.alpha1, 1.0, st.alpha3, 0.0};
        const double d1_ref[5] = {0.0, st.beta2, 0.0, st.beta1, 0.0};
        const double d2_ref[5] = {0.0, st.gamma1, st.gamma2, st.gamma3, 0.0};
        for (int k = -2; k <= 2; ++k) {
            const double x = xi + k * h;
            CHECK(std::abs(eval_basis(bp, i, x, 0, origin) - b_ref[k + 2]) <
                  1e-12 * std::max(1.0, std::abs(b_ref[k + 2])));
            const double scale1 = std::abs(st.beta2);
            CHECK(std::abs(eval_basis(bp, i, x, 1, origin) - d1_ref[k + 2]) <
                  1e-12 * scale1);
            const double scale2 = std::abs(st.gamma2);
            CHECK(std::abs(eval_basis(bp, i, x, 2, origin) - d2_ref[k + 2]) <
                  1e-12 * scale2);
        }
    }
}

TEST_CASE("basis and both derivatives are continuous across knots") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> pd(0.05, 8.0), hd(5e-3, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        const double p = pd(rng), h = hd(rng);
        if (p * h < 2e-4 || p * h > 50) continue;
        const auto bp = make_basis(p, h);
        const auto st = stencil(bp);
        const double eps = 1e-7 * h;
        const double scale[3] = {1.0, std::abs(st.beta2), std::abs(st.gamma2)};
        for (int k = -2; k <= 2; ++k) {  // all junction knots incl. support ends
            const double x = k * h;
            for (int d = 0; d <= 2; ++d) {
                const double jump = std::abs(eval_basis(bp, 0L, x - eps, d) -
                                             eval_basis(bp, 0L, x + eps, d));
                CHECK(jump <= 1e-5 * scale[d]);
            }
        }
    }
}

TEST_CASE("basis value at the center knot is exactly one to rounding") {
    for (double ph : {1e-3, 0.05, 1.0, 4.0}) {
        const auto bp = make_basis(ph / 0.2, 0.2);
        CHECK(rel_err(eval_basis(bp, 0L, 0.0, 0), 1.0) < 1e-12);
    }
}

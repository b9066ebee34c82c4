/**
 * @file tridiagonal.hpp
 * @brief Three-banded linear systems: Thomas solve plus a dense oracle.
 */

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "expb/types.hpp"

namespace expb {

/// Tridiagonal system A*x = rhs with bands stored separately:
/// sub (length n-1), diag (n), sup (n-1).
template <typename Scalar = double>
struct TridiagonalSystem {
    Vector<Scalar> sub;
    Vector<Scalar> diag;
    Vector<Scalar> sup;
    Vector<Scalar> rhs;

    Eigen::Index size() const { return diag.size(); }

    /// Expands the bands into a dense n x n matrix.
    Matrix<Scalar> dense() const {
        const Eigen::Index n = size();
        Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            a(i, i) = diag[i];
            if (i > 0) a(i, i - 1) = sub[i - 1];
            if (i + 1 < n) a(i, i + 1) = sup[i];
        }
        return a;
    }
};

/// Operation counter for complexity assertions.
struct SolveStats {
    std::size_t ops = 0;
};

/// Forward elimination met a pivot too small to divide by.
class singular_pivot_error : public std::runtime_error {
public:
    singular_pivot_error(Eigen::Index row_index, const std::string& what_arg)
        : std::runtime_error(what_arg), row(row_index) {}
    Eigen::Index row;
};

namespace detail {

template <typename Scalar>
void check_bands(const TridiagonalSystem<Scalar>& sys, const char* who) {
    const Eigen::Index n = sys.diag.size();
    if (n < 1) throw std::invalid_argument(std::string(who) + ": empty system");
    if (sys.sub.size() != n - 1 || sys.sup.size() != n - 1 || sys.rhs.size() != n)
        throw std::invalid_argument(std::string(who) + ": band length mismatch");
    if (!sys.diag.allFinite() || !sys.rhs.allFinite() ||
        (n > 1 && (!sys.sub.allFinite() || !sys.sup.allFinite())))
        throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

}  // namespace detail

/// Classical Thomas algorithm: forward sweep, back substitution, no pivoting.
///
/// The assembled collocation matrices are diagonally dominant over the
/// intended parameter ranges; a pivot below 1e-14 times the row's largest
/// band entry raises singular_pivot_error with the failing row index.
template <typename Scalar>
Vector<Scalar> thomas_solve(const TridiagonalSystem<Scalar>& sys,
                            SolveStats* stats = nullptr) {
    detail::check_bands(sys, "thomas_solve");
    const Eigen::Index n = sys.size();
    std::size_t ops = 0;

    Vector<Scalar> cp(n), dp(n);
    auto row_scale = [&](Eigen::Index i) {
        Scalar m = std::abs(sys.diag[i]);
        if (i > 0) m = std::max(m, std::abs(sys.sub[i - 1]));
        if (i + 1 < n) m = std::max(m, std::abs(sys.sup[i]));
        return m;
    };

    Scalar pivot = sys.diag[0];
    if (!(std::abs(pivot) > Scalar(1e-14) * row_scale(0)))
        throw singular_pivot_error(0, "thomas_solve: singular pivot at row 0");
    cp[0] = (n > 1) ? sys.sup[0] / pivot : Scalar(0);
    dp[0] = sys.rhs[0] / pivot;
    ops += 2;

    for (Eigen::Index i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i - 1] * cp[i - 1];
        if (!(std::abs(pivot) > Scalar(1e-14) * row_scale(i)))
            throw singular_pivot_error(
                i, "thomas_solve: singular pivot at row " + std::to_string(i));
        cp[i] = (i + 1 < n) ? sys.sup[i] / pivot : Scalar(0);
        dp[i] = (sys.rhs[i] - sys.sub[i - 1] * dp[i - 1]) / pivot;
        ops += 5;
    }

    Vector<Scalar> x(n);
    x[n - 1] = dp[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) {
        x[i] = dp[i] - cp[i] * x[i + 1];
        ops += 2;
    }

    if (stats) stats->ops += ops;
    return x;
}

/// Dense Gaussian elimination with partial pivoting on the expanded matrix.
/// Test oracle for thomas_solve; O(n^3), use on small systems.
template <typename Scalar>
Vector<Scalar> dense_solve(const TridiagonalSystem<Scalar>& sys) {
    detail::check_bands(sys, "dense_solve");
    Eigen::PartialPivLU<Matrix<Scalar>> lu(sys.dense());
    const auto piv = lu.matrixLU().diagonal().cwiseAbs();
    const Scalar scale = piv.maxCoeff();
    if (!(piv.minCoeff() > Scalar(1e-14) * scale))
        throw std::runtime_error("dense_solve: singular matrix");
    return lu.solve(sys.rhs);
}

}  // namespace expb

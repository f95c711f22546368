#pragma once

#include "kitopt/error.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace kitopt {

/// Thin SVD  a = u * diag(sigma) * vt  with p = min(n, m).
///
/// Sign convention: in every column of u the entry of largest magnitude is
/// non-negative (the lowest row index wins a tie); the matching row of vt is
/// flipped with it. With distinct singular values this makes the factors
/// unique, and for an entrywise non-negative matrix with a simple leading
/// singular value the first column of u is entrywise non-negative.
template <typename Scalar>
struct SvdFactors {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    Matrix u;      ///< n x p, orthonormal columns
    Vector sigma;  ///< length p, non-increasing, non-negative
    Matrix vt;     ///< p x m, orthonormal rows

    Eigen::Index rank_limit() const noexcept { return sigma.size(); }
};

/// Leading-r slice of an SvdFactors.
template <typename Scalar>
struct TruncatedSvd {
    using Matrix = typename SvdFactors<Scalar>::Matrix;
    using Vector = typename SvdFactors<Scalar>::Vector;

    Eigen::Index rank = 0;
    Matrix u;      ///< n x r
    Vector sigma;  ///< length r
    Matrix vt;     ///< r x m
};

namespace detail {

/// Factor entries this close to zero are flushed to exactly zero, so that the
/// sign patterns read downstream do not depend on rounding noise.
template <typename Scalar>
constexpr Scalar zero_flush() {
    return Scalar(1e-12);
}

template <typename Matrix>
void flush_tiny(Matrix& m) {
    using Scalar = typename Matrix::Scalar;
    m = m.unaryExpr([](Scalar x) { return std::abs(x) <= zero_flush<Scalar>() ? Scalar(0) : x; });
}

}  // namespace detail

/// Throws Error(NonFiniteInput) on inf/nan entries and Error(NumericFailure)
/// if the factorization misses the reconstruction/orthonormality tolerance.
template <typename Derived>
SvdFactors<typename Derived::Scalar> svd(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    using Matrix = typename SvdFactors<Scalar>::Matrix;

    if (a.rows() == 0 || a.cols() == 0) throw Error(ErrorCode::InvalidArgument, "svd of an empty matrix");
    if (!a.allFinite()) throw Error(ErrorCode::NonFiniteInput, "svd input has non-finite entries");

    const Matrix dense = a;
    Eigen::JacobiSVD<Matrix> solver(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::NumericFailure, "svd did not converge");

    SvdFactors<Scalar> f{solver.matrixU(), solver.singularValues(), solver.matrixV().transpose()};

    for (Eigen::Index j = 0; j < f.u.cols(); ++j) {
        Eigen::Index arg = 0;
        Scalar best = -1;
        for (Eigen::Index i = 0; i < f.u.rows(); ++i) {
            if (std::abs(f.u(i, j)) > best) {
                best = std::abs(f.u(i, j));
                arg = i;
            }
        }
        if (f.u(arg, j) < 0) {
            f.u.col(j) *= Scalar(-1);
            f.vt.row(j) *= Scalar(-1);
        }
    }
    detail::flush_tiny(f.u);
    detail::flush_tiny(f.vt);

    const Eigen::Index p = f.sigma.size();
    const Scalar tol = Scalar(1e-8);
    const Scalar scale = std::max(Scalar(1), dense.norm());
    const Scalar residual = (dense - f.u * f.sigma.asDiagonal() * f.vt).norm();
    const Scalar u_err = (f.u.transpose() * f.u - Matrix::Identity(p, p)).cwiseAbs().maxCoeff();
    const Scalar v_err = (f.vt * f.vt.transpose() - Matrix::Identity(p, p)).cwiseAbs().maxCoeff();
    if (!(residual <= tol * scale) || !(u_err <= tol) || !(v_err <= tol))
        throw Error(ErrorCode::NumericFailure, "svd missed its accuracy tolerance");
    return f;
}

/// Throws Error(RankOutOfRange) unless 1 <= r <= p.
template <typename Scalar>
TruncatedSvd<Scalar> truncate(const SvdFactors<Scalar>& f, Eigen::Index r) {
    if (r < 1 || r > f.rank_limit())
        throw Error(ErrorCode::RankOutOfRange,
                    "rank " + std::to_string(r) + " outside [1, " + std::to_string(f.rank_limit()) + "]");
    return {r, f.u.leftCols(r), f.sigma.head(r), f.vt.topRows(r)};
}

template <typename Scalar>
typename TruncatedSvd<Scalar>::Matrix reconstruct(const TruncatedSvd<Scalar>& t) {
    return t.u * t.sigma.asDiagonal() * t.vt;
}

template <typename Scalar>
typename SvdFactors<Scalar>::Matrix reconstruct(const SvdFactors<Scalar>& f) {
    return f.u * f.sigma.asDiagonal() * f.vt;
}

/// (rank, sigma) pairs, rank starting at 1.
template <typename Scalar>
std::vector<std::pair<Eigen::Index, Scalar>> scree(const SvdFactors<Scalar>& f) {
    std::vector<std::pair<Eigen::Index, Scalar>> out;
    out.reserve(static_cast<std::size_t>(f.sigma.size()));
    for (Eigen::Index j = 0; j < f.sigma.size(); ++j) out.emplace_back(j + 1, f.sigma(j));
    return out;
}

}  // namespace kitopt

#pragma once

#include <Eigen/Core>

#include <cstddef>

namespace landgen {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Pairwise interaction angles of one component. Only the strict upper
/// triangle (u < v) carries meaning; `validate` rejects anything else.
/// Indices are 0-based.
class AngleMatrix {
public:
    AngleMatrix() = default;
    explicit AngleMatrix(std::size_t dim) : angles_(Matrix::Zero(dim, dim)) {}

    std::size_t dim() const noexcept { return static_cast<std::size_t>(angles_.rows()); }

    double operator()(std::size_t u, std::size_t v) const { return angles_(u, v); }
    double& operator()(std::size_t u, std::size_t v) { return angles_(u, v); }

    const Matrix& matrix() const noexcept { return angles_; }

    bool is_zero() const { return dim() == 0 || angles_.isZero(0.0); }

    friend bool operator==(const AngleMatrix& a, const AngleMatrix& b) {
        return a.angles_.rows() == b.angles_.rows() && a.angles_ == b.angles_;
    }

private:
    Matrix angles_;
};

/// Plane rotation in coordinates (u, v) of a `dim`-dimensional space:
/// cos at (u,u) and (v,v), -sin at (u,v), sin at (v,u). Requires u < v < dim.
Matrix givens_matrix(std::size_t dim, std::size_t u, std::size_t v, double psi);

/// R = I * G(0,1) * G(0,2) * ... * G(d-2,d-1), skipping zero angles. The
/// multiplication order is fixed: outer loop over u, inner loop over v.
Matrix build_rotation(const AngleMatrix& psi);

/// max |R R^T - I|.
double orthogonality_residual(const Matrix& r);

}  // namespace landgen

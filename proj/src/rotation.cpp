#include "landgen/rotation.hpp"

#include "landgen/error.hpp"

#include <cmath>
#include <string>

namespace landgen {

Matrix givens_matrix(std::size_t dim, std::size_t u, std::size_t v, double psi) {
    if (u >= v || v >= dim) {
        throw InvalidArgument("givens_matrix: need u < v < dim, got u=" + std::to_string(u) +
                              " v=" + std::to_string(v) + " dim=" + std::to_string(dim));
    }
    Matrix g = Matrix::Identity(dim, dim);
    const double c = std::cos(psi);
    const double s = std::sin(psi);
    g(u, u) = c;
    g(v, v) = c;
    g(u, v) = -s;
    g(v, u) = s;
    return g;
}

Matrix build_rotation(const AngleMatrix& psi) {
    const std::size_t d = psi.dim();
    Matrix r = Matrix::Identity(d, d);
    for (std::size_t u = 0; u + 1 < d; ++u) {
        for (std::size_t v = u + 1; v < d; ++v) {
            const double angle = psi(u, v);
            if (angle == 0.0) continue;
            // Right-multiplying by G(u,v) only mixes columns u and v.
            const double c = std::cos(angle);
            const double s = std::sin(angle);
            for (std::size_t i = 0; i < d; ++i) {
                const double ru = r(i, u);
                const double rv = r(i, v);
                r(i, u) = ru * c + rv * s;
                r(i, v) = rv * c - ru * s;
            }
        }
    }
    return r;
}

double orthogonality_residual(const Matrix& r) {
    if (r.rows() == 0) return 0.0;
    const Matrix gram = r * r.transpose();
    return (gram - Matrix::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
}

}  // namespace landgen

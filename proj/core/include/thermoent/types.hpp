#pragma once

#include <complex>

#include <Eigen/Dense>

namespace thermoent {

using Complex = std::complex<double>;

using RealMatrix4 = Eigen::Matrix4d;
using ComplexMatrix4 = Eigen::Matrix4cd;

/// Linear map on column-stacked 4×4 matrices.
using Superoperator = Eigen::Matrix<Complex, 16, 16>;
using SuperVector = Eigen::Matrix<Complex, 16, 1>;

/// Column-stacking vectorization, vec(X)[i + 4j] = X(i, j).
inline SuperVector vectorize(const ComplexMatrix4& m) {
    return Eigen::Map<const SuperVector>(m.data());
}

inline ComplexMatrix4 unvectorize(const SuperVector& v) {
    return Eigen::Map<const ComplexMatrix4>(v.data());
}

inline ComplexMatrix4 apply(const Superoperator& op, const ComplexMatrix4& m) {
    return unvectorize(op * vectorize(m));
}

}  // namespace thermoent

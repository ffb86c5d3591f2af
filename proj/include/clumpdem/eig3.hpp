#pragma once

#include <array>

#include "clumpdem/mat3.hpp"

namespace clumpdem {

/// Eigendecomposition of a symmetric 3x3 matrix: values sorted descending,
/// axes orthonormal and forming a right-handed basis.
struct EigenResult {
    std::array<double, 3> values;
    std::array<Vec3, 3> axes;
};

/// Cyclic Jacobi iteration. Throws std::invalid_argument if the input is
/// not finite or not symmetric (1e-12 relative).
EigenResult eig_sym3(const Mat3& m);

} // namespace clumpdem

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pgturan/geometry.hpp"

namespace pgturan {

/// 3x3 matrix over a finite field, row-major.
using Mat3 = std::array<Elem, 9>;

/**
 * Collineation of PG_2(q): P -> M * sigma(P), where sigma raises every
 * coordinate to the power p^frobenius_power.
 */
struct Collineation
{
    Mat3 matrix{1, 0, 0, 0, 1, 0, 0, 0, 1};
    int frobenius_power = 0;

    PointId apply(const Geometry& g, PointId p) const;
    std::vector<PointId> apply(const Geometry& g, std::span<const PointId> pts) const;
    BitSet apply(const Geometry& g, const BitSet& pts) const;
};

Mat3 mat_mul(const FieldTable& f, const Mat3& a, const Mat3& b);
/// Inverse of a nonsingular matrix; nullopt when singular.
std::optional<Mat3> mat_inverse(const FieldTable& f, const Mat3& a);

/// Matrix sending (1,0,0),(0,1,0),(0,0,1),(1,1,1) to the four given points
/// (in that order); nullopt unless the points are in general position.
std::optional<Mat3> frame_matrix(const Geometry& g, std::array<PointId, 4> pts);

/// Projectivity mapping the ordered 4-tuple `from` onto `to`.
std::optional<Collineation> projectivity(const Geometry& g, std::array<PointId, 4> from, std::array<PointId, 4> to);

/// The standard frame (1,0,0),(0,1,0),(0,0,1),(1,1,1).
std::array<PointId, 4> standard_frame(const Geometry& g);

/// Number of field automorphisms (k for GF(p^k)).
int automorphism_count(const FieldTable& f);

} // namespace pgturan

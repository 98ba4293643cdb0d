#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgturan/bitset.hpp"
#include "pgturan/gf.hpp"

namespace pgturan {

using PointId = int;
using LineId = int;

/// Homogeneous coordinates, normalized so the first nonzero entry is 1.
struct ProjPoint
{
    std::vector<Elem> coords;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

struct ProjLine
{
    std::vector<PointId> points; // sorted, q+1 entries
    /// Line coordinates [x,y,z] (planes only): (a,b,c) is on the line iff ax+by+cz = 0.
    std::optional<std::array<Elem, 3>> dual;
};

/**
 * PG_m(q) as an indexed incidence structure.
 *
 * Points are listed in lexicographic order of their normalized coordinate
 * vectors; lines in lexicographic order of their sorted point lists.
 * Immutable after construction.
 */
class Geometry
{
public:
    Geometry(int m, FieldTable field);

    int m() const noexcept { return m_; }
    int q() const noexcept { return field_.q(); }
    const FieldTable& field() const noexcept { return field_; }

    int num_points() const noexcept { return static_cast<int>(points_.size()); }
    int num_lines() const noexcept { return static_cast<int>(lines_.size()); }

    const ProjPoint& point(PointId p) const { return points_.at(static_cast<std::size_t>(p)); }
    const ProjLine& line(LineId l) const { return lines_.at(static_cast<std::size_t>(l)); }
    const std::vector<ProjPoint>& points() const noexcept { return points_; }
    const std::vector<ProjLine>& lines() const noexcept { return lines_; }

    /// Points of a line as a bitset over point ids.
    const BitSet& line_points(LineId l) const { return line_points_[static_cast<std::size_t>(l)]; }
    /// Lines through a point as a bitset over line ids.
    const BitSet& point_lines(PointId p) const { return point_lines_[static_cast<std::size_t>(p)]; }
    /// Line ids through a point, ascending.
    const std::vector<LineId>& lines_through(PointId p) const { return lines_through_[static_cast<std::size_t>(p)]; }

    /// The unique line through two distinct points.
    LineId line_through(PointId a, PointId b) const;

    bool incident(PointId p, LineId l) const { return line_points(l).test(static_cast<std::size_t>(p)); }

    /// Point with the given (not necessarily normalized) coordinates.
    PointId find_point(std::span<const Elem> coords) const;
    /// Line with the given dual coordinates (planes only, not necessarily normalized).
    LineId find_line(std::array<Elem, 3> dual) const;

    /// Normalizes so that the first nonzero coordinate is 1.
    std::vector<Elem> normalize(std::span<const Elem> coords) const;

    /// Empty point set of the right size.
    BitSet empty_point_set() const { return BitSet(points_.size()); }

    /// Description of the first violated structural invariant (counts,
    /// line sizes, unique line through each pair, point degrees), or empty.
    std::string check_invariants() const;

private:
    std::size_t encode(std::span<const Elem> coords) const;

    int m_;
    FieldTable field_;
    std::vector<ProjPoint> points_;
    std::vector<ProjLine> lines_;
    std::vector<BitSet> line_points_;
    std::vector<BitSet> point_lines_;
    std::vector<std::vector<LineId>> lines_through_;
    std::vector<LineId> pair_line_;
    std::vector<PointId> code_to_point_;
    std::vector<LineId> dual_to_line_;
};

/// PG_m(q) over the default field of order q.
Geometry build_geometry(int m, int q);

/// Closed-form number of points, sum_{i=0}^{m} q^i.
long long projective_point_count(int m, int q);
/// Closed-form number of lines, [m+1 choose 2]_q.
long long projective_line_count(int m, int q);

/// Field element in the notation used for coordinates: integers for prime
/// fields, 0, 1 and powers of the primitive element ("ω", "ω^k") otherwise.
std::string format_element(const FieldTable& f, Elem a);
/// Accepts integers (negative values mean field negation; prime subfield
/// otherwise), and for extension fields "ω", "w", "ω^k", "w^k" or "ω³"
/// with superscript digits.
Elem parse_element(const FieldTable& f, std::string_view text);

/// "(x,y,z)" for planes, "(x0,...,xm)" in general.
std::string format_point(const Geometry& g, PointId p);
/// "[x,y,z]" for planes; "{(..),(..),..}" point list otherwise.
std::string format_line(const Geometry& g, LineId l);

PointId parse_point(const Geometry& g, std::string_view text);
/// Planes only: parses "[x,y,z]".
LineId parse_line(const Geometry& g, std::string_view text);

/// Parses a brace- or space-separated list of points such as
/// "{(1,0,0),(0,1,0)}".
std::vector<PointId> parse_point_list(const Geometry& g, std::string_view text);
std::vector<LineId> parse_line_list(const Geometry& g, std::string_view text);

} // namespace pgturan

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgturan/bitset.hpp"
#include "pgturan/collineation.hpp"
#include "pgturan/deadline.hpp"
#include "pgturan/geometry.hpp"

namespace pgturan {

/// Subset of the points of a fixed geometry.
using PointSet = BitSet;

PointSet make_point_set(const Geometry& g, std::span<const PointId> pts);

// ---------------------------------------------------------------- blocking

/// 1 <= |s ∩ l| <= q for every line l.
bool is_blocking_set(const Geometry& g, const PointSet& s);

struct BlockingSearchResult
{
    /// Largest (max_*) or smallest (min_*) blocking-set size; nullopt when
    /// none exists, or when !exact and none was found before the deadline.
    std::optional<int> size;
    PointSet witness;
    bool exact = false;
    std::uint64_t explored_nodes = 0;
};

/// Largest blocking set. Exhaustive subset scan up to 16 points, otherwise
/// branch-and-bound on the complementary smallest blocking set.
BlockingSearchResult max_blocking_set_size(const Geometry& g, Deadline deadline = {});

/// Smallest blocking set by branch-and-bound. Without symmetry reduction
/// every subset order is explored; with it the search assumes the blocking
/// set contains the triangle (1,0,..),(0,1,..),(0,0,1,..), which is valid
/// because a blocking set is never contained in a line and PGL(m+1,q) is
/// transitive on ordered non-collinear triples.
BlockingSearchResult min_blocking_set_branch_and_bound(const Geometry& g, Deadline deadline = {}, bool use_symmetry = true);

/// Exhaustive scan over all 2^n subsets (n <= 24); reports the largest.
BlockingSearchResult max_blocking_set_exhaustive(const Geometry& g, Deadline deadline = {});

// ---------------------------------------------------------------- arcs

/// Counts of 0-, 1- and 2-secant lines and the list of passants.
struct ArcRecord
{
    PointSet points;
    bool is_complete = false;
    std::array<int, 3> secant_counts{}; // passants, tangents, secants
    std::vector<LineId> passant_ids;

    int size() const { return static_cast<int>(points.count()); }
    int passants() const { return secant_counts[0]; }
};

/// No three points collinear. Planes only.
bool is_arc(const Geometry& g, const PointSet& s);
/// An arc that no outside point extends. Planes only.
bool is_complete_arc(const Geometry& g, const PointSet& s);

/// Throws if s is not an arc.
ArcRecord secant_profile(const Geometry& g, const PointSet& s);

struct ArcEnumerationOptions
{
    /// q > 8 is refused unless set.
    bool allow_large_q = false;
    Deadline deadline{};
};

struct ArcEnumeration
{
    std::vector<ArcRecord> arcs; // sorted by (size, point list)
    bool complete = true;        // false when the deadline interrupted the search
    std::uint64_t explored_nodes = 0;
};

/// All complete arcs that contain the standard frame. Every complete arc
/// of size >= 4 is projectively equivalent to at least one of them.
ArcEnumeration enumerate_complete_arcs(const Geometry& g, ArcEnumerationOptions options = {});

/// Searches PΓL(3,q) for a collineation sending a onto b.
std::optional<Collineation> find_collineation(const Geometry& g, const PointSet& a, const PointSet& b);

struct CollineationClasses
{
    /// Input indices per class, classes ordered by their first member.
    std::vector<std::vector<std::size_t>> classes;
    /// For each input, a collineation mapping the class representative onto it.
    std::vector<Collineation> to_member;
};

/// Partitions arcs (all of size >= 4) into PΓL(3,q) orbits.
CollineationClasses classify_up_to_collineation(const Geometry& g, std::span<const PointSet> arcs);

/// Maximum over points of the number of the given lines through it.
int max_concurrency(const Geometry& g, std::span<const LineId> lines);

} // namespace pgturan

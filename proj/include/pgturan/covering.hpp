#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgturan/deadline.hpp"
#include "pgturan/structures.hpp"

namespace pgturan {

struct HittingSetResult
{
    int minimum_size = 0;
    PointSet witness;
    /// True when the search was exhausted, i.e. no smaller hitting set exists.
    bool optimal = false;
    std::uint64_t explored_nodes = 0;
};

/**
 * Exact minimum hitting set: smallest subset of `universe` meeting every
 * member of `family`.
 *
 * Branch-and-bound: branch on the uncovered member with the fewest usable
 * points (ascending point order, earlier siblings excluded), prune with
 * ceil(uncovered / max frequency). A greedy cover seeds the incumbent.
 * Deterministic. Throws if a member is disjoint from the universe.
 */
HittingSetResult min_hitting_set(const PointSet& universe, std::span<const PointSet> family, Deadline deadline = {});

/// m(K): the smallest set of points meeting every passant of a complete arc.
/// The universe is the complement of the arc (arc points lie on no passant).
HittingSetResult m_of_arc(const Geometry& g, const ArcRecord& arc, Deadline deadline = {});

struct ArcClassReport
{
    ArcRecord representative;
    std::size_t members = 0; // frame-anchored arcs in the class
    HittingSetResult m;      // m(K) for the representative
    bool m_consistent = true; // every member gave the same m(K)
};

struct MqReport
{
    int q = 0;
    std::vector<ArcClassReport> classes; // ordered by (size, representative)
    int M = 0;                           // min over classes
    int max_over_classes = 0;
    std::size_t witness_class = 0;
    bool optimal = false; // enumeration and every hitting-set search exhausted
    std::uint64_t explored_nodes = 0;
};

struct MqOptions
{
    Deadline deadline{};
    /// Recompute m(K) for every enumerated arc, not only representatives.
    bool check_every_member = true;
    /// Worker threads for the per-arc hitting-set searches (>= 1).
    unsigned threads = 1;
};

/// M(q) = min over complete arcs of m(K), from frame-anchored representatives.
MqReport compute_Mq(const Geometry& g, MqOptions options = {});

struct PassantAnalysis
{
    int passant_count = 0;
    std::vector<LineId> passants;
    std::vector<int> through; // per point: passants through it
    int peak = 0;             // max of through over points off the arc
    std::vector<PointId> peak_points;
    std::vector<std::vector<LineId>> peak_lines; // S(P) for each peak point, ascending
};

PassantAnalysis passant_analysis(const Geometry& g, const PointSet& arc);

/// Passants of the arc through a point, ascending.
std::vector<LineId> passants_through(const Geometry& g, const PassantAnalysis& a, PointId p);

struct CheckResult
{
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool passed = false;
    bool timed_out = false;
};

struct AppendixReport
{
    char which = 'A';
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/**
 * Machine check of the published case analysis for the complete 6-arcs of
 * PG_2(7) (which = 'A', both arcs) and PG_2(8) (which = 'B'): completeness,
 * passant counts, peak points and their passant sets, the listed
 * intersection identities, union maxima over index subsets, and the final
 * non-existence of a small cover cross-checked with min_hitting_set.
 */
AppendixReport verify_appendix(const Geometry& g, char which, Deadline deadline = {});

} // namespace pgturan

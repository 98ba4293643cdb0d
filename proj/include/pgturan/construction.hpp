#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pgturan/deadline.hpp"
#include "pgturan/geometry.hpp"

namespace pgturan {

enum class Scheme {
    /// X plus t singleton-meeting parts Y_i; edges meet X in 1..q vertices.
    BlockingSet,
    /// X, Y and M-1 singleton-meeting parts Z_i; edges also meet Y in <= 2.
    ArcCover,
};

const char* scheme_name(Scheme s);

struct PartitionSpec
{
    Scheme scheme = Scheme::BlockingSet;
    int n = 0;
    int q = 2;
    int m = 2;
    int x_size = 0;
    int y_size = 0;           // ArcCover only
    std::vector<int> parts;   // Y_i (BlockingSet) or Z_i (ArcCover)
    std::vector<double> rates; // generating rates, empty when built from sizes

    int uniformity() const { return q + 1; }
    /// Part sizes in vertex order: X, [Y,] then the small parts.
    std::vector<int> layout() const;
    void validate() const;
};

/// Number of singleton-meeting parts for the blocking-set scheme:
/// sum_{i=1}^m q^i - k, with k the largest blocking-set size (0 if none).
int blocking_scheme_parts(int m, int q, int k);

/**
 * Largest-remainder rounding of rates to part sizes summing to n.
 * BlockingSet: rates = {alpha} (X gets 1 - t*alpha) or {alpha, beta}.
 * ArcCover: rates = {alpha, beta, gamma}, with M - 1 = parts Z_i.
 * Rates must be nonnegative and satisfy the affine constraint to 1e-9.
 */
PartitionSpec make_partition(int n, int q, int m, Scheme scheme, std::span<const double> rates, int parts);

PartitionSpec make_partition_from_sizes(Scheme scheme, int q, int m, int x_size, int y_size, std::vector<int> parts);

struct Hypergraph
{
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> edges; // sorted tuples, lexicographic order
    std::vector<int> part;               // part label per vertex
};

/// Enumeration limit on n for build_hypergraph: 40 for q=2, 25 for q=3, 20 otherwise.
int default_enumeration_limit(int q);

/// Edges generated part by part; throws std::length_error past the limit.
Hypergraph build_hypergraph(const PartitionSpec& spec, std::optional<int> limit = std::nullopt);

/// All r-subsets of an n-set, one part.
Hypergraph make_complete_hypergraph(int n, int r);

bool edge_satisfies_scheme(const PartitionSpec& spec, std::span<const int> edge);

/// Exact edge count from part sizes (elementary symmetric polynomials in the
/// small-part sizes); no enumeration.
mpz_class count_edges_exact(const PartitionSpec& spec);

/// The floored lower bound used in the edge-count estimate, e.g. for the
/// blocking-set scheme sum_i C(floor(beta n), i) C(t, q+1-i) floor(alpha n)^(q+1-i).
/// Needs spec.rates.
mpz_class displayed_edge_lower_bound(const PartitionSpec& spec);

enum class EmbeddingVerdict { Yes, No, Timeout };

const char* verdict_name(EmbeddingVerdict v);

struct EmbeddingResult
{
    EmbeddingVerdict verdict = EmbeddingVerdict::No;
    std::vector<int> witness; // pattern point -> vertex, when Yes
    std::uint64_t explored_nodes = 0;
};

/**
 * Does h contain a copy of the pattern geometry (points -> vertices,
 * injective, every line onto an edge)? Backtracking with pattern points
 * ordered to close as many lines as early as possible, partial lines
 * checked against edge sub-masks, and verified part symmetries (vertex
 * transpositions within a part, swaps of equal parts) broken. n <= 64.
 */
EmbeddingResult contains_subgeometry(const Hypergraph& h, const Geometry& pattern, Deadline deadline = {});

} // namespace pgturan

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "raag/lattice.hpp"

namespace raag {

/// A sequence of generators whose successive canonical centralisers strictly
/// descend: chain[0] is the full vertex set and chain[i] is the orthogonal
/// of the first i sequence vertices, with every inclusion strict.
struct ParameterSystem {
    CommutationGraph graph;
    std::vector<int> sequence;
    std::vector<std::uint64_t> chain; ///< chain.size() == sequence.size() + 1

    int length() const { return static_cast<int>(sequence.size()); }
    bool ends_in_center() const {
        return chain.back() == graph.orthogonal_bits(graph.all_bits());
    }
};

/// Split the other vertices by commutation with x: Y = neighbours of x,
/// W = the rest.  Both sets are bound to g and exclude x itself.
std::pair<GeneratorSet, GeneratorSet> partition_yw(const CommutationGraph& g, int x);

/// Validate a generator sequence as a parameter system; absent when some
/// step fails to shrink the chain.  Unknown or repeated vertices are errors.
std::optional<ParameterSystem> is_parameter_system(const CommutationGraph& g,
                                                   std::span<const int> sequence);

struct LockInfo {
    int position = 0;   ///< maximal prefix length lying inside Y
    GeneratorSet keys;  ///< all w in W with chain[position] inside star(w)
};

struct TieInfo {
    int position = 0; ///< maximal i with chain[i] not inside Y
    bool t1a = false; ///< position < n and some y in Y drops out at the next step
    bool t1b = false; ///< position == n and W meets the final chain set
    bool t2 = false;  ///< position < n, prefix inside Y, next vertex in W
};

/// Lock/tie classification of a parameter system of the vertex-deleted
/// graph, relative to restoring the vertex x of g.
struct LockTieReport {
    int vertex = 0; ///< x, as an index of g
    GeneratorSet y_set, w_set;
    std::optional<LockInfo> locked;
    bool right_locked = false; ///< the reported lock position is the maximal admissible one
    std::optional<TieInfo> tied;

    bool tied_t1() const { return tied && (tied->t1a || tied->t1b); }
    bool t1_exclusive() const { return tied_t1() && !tied->t2; }
};

/// The system must live over delete_vertex(g, x); otherwise DomainError.
std::optional<LockInfo> lock_status(const ParameterSystem& p, const CommutationGraph& g, int x);
std::optional<TieInfo> tie_status(const ParameterSystem& p, const CommutationGraph& g, int x);
LockTieReport analyze_system(const ParameterSystem& p, const CommutationGraph& g, int x);

/// Extend a locked or tied system of the vertex-deleted graph to a parameter
/// system of g: x is inserted after the tie position, the least key after the
/// lock position, or both; a system that is neither locked nor tied carries
/// over unchanged.  The result is revalidated in g.
ParameterSystem build_s(const ParameterSystem& q, const CommutationGraph& g, int x,
                        const LockTieReport& report);

struct EnumerationStats {
    std::uint64_t nodes = 0;
    bool truncated = false;
};

/// Depth-first enumeration (least vertex first) of the height-realizing
/// parameter systems: those of length cdim(g) ending in the centre.  The
/// visitor returns false to stop early; enumeration is truncated once the
/// node budget is spent.
EnumerationStats enumerate_maximal_parameter_systems(
    const CommutationGraph& g, std::uint64_t cap,
    const std::function<bool(const ParameterSystem&)>& visit);

std::vector<ParameterSystem> collect_maximal_parameter_systems(const CommutationGraph& g,
                                                               std::uint64_t cap,
                                                               EnumerationStats* stats = nullptr);

/// Systems one shorter than cdim(g) whose chain still ends in the centre
/// (exactly one chain step skips a level).
EnumerationStats enumerate_short_center_systems(
    const CommutationGraph& g, std::uint64_t cap,
    const std::function<bool(const ParameterSystem&)>& visit);

/// Graph-level sufficient conditions for the extension delta.
/// 1a and 1b force delta = 2; 2a and 2b force delta = 0.
struct QuickChecks {
    bool c1a = false; ///< the centre grows strictly when x is removed
    bool c1b = false; ///< the neighbourhood subgroup already realizes cdim of G_x
    bool c2a = false; ///< G_x splits as G(Y) x G(W) with G(W) centreless
    bool c2b = false; ///< some x-free generator set has the same centraliser as x
    GeneratorSet s_witness; ///< witness set for 2b when it fires
};

QuickChecks quick_checks(const CommutationGraph& g, int x);

/// How the extension delta is explained: clause ids 1, 2a, 2b, 3 of the
/// delta classification (2 <-> 1; 1 <-> 2a or 2b; 0 <-> 3).
enum class DeltaClause { c1, c2a, c2b, c3 };

const char* to_string(DeltaClause clause);

struct ExtensionWitness {
    ParameterSystem system; ///< over the vertex-deleted graph
    LockTieReport report;
};

struct ExtensionReport {
    int vertex = 0;
    int cdim_with = 0;    ///< cdim of g
    int cdim_without = 0; ///< cdim of delete_vertex(g, x)
    int delta = 0;
    DeltaClause clause = DeltaClause::c3;
    std::vector<ExtensionWitness> witnesses; ///< clause-confirming systems, when found
    QuickChecks quick;
    EnumerationStats search;
    bool witnesses_incomplete = false; ///< search truncated before confirming the clause
};

/// Exact delta (always computed from the two lattices) plus a capped search
/// for explanatory locked/tied witnesses.
ExtensionReport classify_extension(const CommutationGraph& g, int x,
                                   std::uint64_t cap = 1000000);

} // namespace raag

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// An orthogonally closed vertex set: carrier = witness-orthogonal, and the
/// stored witness satisfies orthogonal(witness) = carrier.
struct ClosedSet {
    GeneratorSet carrier;
    GeneratorSet witness;
};

/// The family of all orthogonally closed vertex sets of a graph, ordered by
/// inclusion: a finite lattice whose meet is intersection and whose join is
/// the least closed superset.  Its height is the centraliser dimension of
/// the group presented by the graph.
///
/// Elements are generated as the intersection closure of the vertex stars
/// together with the full set; they are stored sorted by decreasing size
/// (ties by bit pattern), so the top is element 0.
class CanonicalLattice {
public:
    static CanonicalLattice build(const CommutationGraph& g);

    const CommutationGraph& graph() const { return graph_; }
    int size() const { return static_cast<int>(elements_.size()); }

    ClosedSet at(int i) const;
    std::uint64_t carrier_bits(int i) const;
    std::optional<int> index_of_bits(std::uint64_t bits) const;

    int top() const { return top_; }
    int bottom() const { return bottom_; }

    /// Length of the longest strictly descending chain from element i to the
    /// bottom.
    int height_of(int i) const;
    /// Lattice height = height_of(top) = centraliser dimension.
    int height() const { return height_of(top_); }

    int meet(int a, int b) const;
    int join(int a, int b) const;

    /// Covering relation as (upper, lower) index pairs, lexicographic.
    const std::vector<std::pair<int, int>>& hasse_edges() const { return hasse_; }
    std::vector<int> covers_below(int i) const;

private:
    CommutationGraph graph_;
    std::vector<std::uint64_t> elements_;
    std::vector<int> heights_;
    std::vector<std::pair<int, int>> hasse_;
    int top_ = 0;
    int bottom_ = 0;

    int require_index(std::uint64_t bits) const;
    void check_element(int i) const;
};

/// Centraliser dimension: height of the canonical lattice.
int cdim(const CommutationGraph& g);

/// A longest chain of closed sets from the full set down to the centre,
/// realized by generators: sets[i] is the orthogonal of the first i witness
/// vertices.  Ties are broken toward the least vertex index.
struct MaxChain {
    std::vector<ClosedSet> sets;
    std::vector<int> witness;
};

MaxChain max_chain(const CommutationGraph& g);

/// Independent oracle for cdim: memoized recursive descent over closed sets,
/// branching on every vertex that strictly shrinks the current set.
/// Guarded to graphs with at most 12 vertices.
int brute_force_cdim(const CommutationGraph& g);

} // namespace raag

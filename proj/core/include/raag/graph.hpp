#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

/// Hard vertex capacity: generator sets are machine bitsets.
inline constexpr int kMaxVertices = 64;

class CommutationGraph;

/// Subset of the generators of one commutation graph, stored as a bitset.
///
/// Every set remembers (by structural fingerprint) which graph it is bound
/// to; binary operations on sets bound to different graphs throw
/// DomainError.  Sets are obtained from a graph via empty_set(), full_set(),
/// set_of() and the orthogonality operators.
class GeneratorSet {
public:
    GeneratorSet() = default;

    std::uint64_t bits() const { return bits_; }
    std::uint64_t graph_fingerprint() const { return fp_; }

    bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1u; }
    int count() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }

    bool is_subset_of(const GeneratorSet& other) const {
        check_same(other);
        return (bits_ & ~other.bits_) == 0;
    }

    GeneratorSet intersect(const GeneratorSet& other) const {
        check_same(other);
        return GeneratorSet(bits_ & other.bits_, fp_);
    }
    GeneratorSet unite(const GeneratorSet& other) const {
        check_same(other);
        return GeneratorSet(bits_ | other.bits_, fp_);
    }
    GeneratorSet minus(const GeneratorSet& other) const {
        check_same(other);
        return GeneratorSet(bits_ & ~other.bits_, fp_);
    }

    /// Member indices in ascending order.
    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(__builtin_ctzll(b));
        return out;
    }

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    friend class CommutationGraph;
    GeneratorSet(std::uint64_t bits, std::uint64_t fp) : bits_(bits), fp_(fp) {}
    void check_same(const GeneratorSet& other) const {
        if (fp_ != other.fp_)
            throw DomainError("generator sets are bound to different graphs");
    }

    std::uint64_t bits_ = 0;
    std::uint64_t fp_ = 0;
};

/// Finite simple undirected graph on named generators: the presentation of a
/// partially commutative group.  Two generators commute exactly when they are
/// adjacent (and every generator commutes with itself).
///
/// Vertex order is fixed at construction (declaration order) and all
/// GeneratorSet values index against it.  Instances are immutable and cheap
/// to copy; the representation is shared.
class CommutationGraph {
public:
    /// Empty graph (trivial group).
    CommutationGraph();

    /// Build from vertex names and edges given as index pairs.
    /// Throws ParseError for invalid names or duplicate names, DomainError
    /// for self-loops or out-of-range endpoints, CapacityError above
    /// kMaxVertices.
    CommutationGraph(std::vector<std::string> names,
                     const std::vector<std::pair<int, int>>& edges);

    /// Graph on vertices x1..xn with edge set encoded as a bitmask over the
    /// pairs (0,1),(0,2),...,(0,n-1),(1,2),... in that order.
    static CommutationGraph from_edge_mask(int n, std::uint64_t mask);

    int size() const;
    const std::string& name(int v) const;
    const std::vector<std::string>& names() const;
    std::optional<int> index_of(std::string_view name) const;

    bool adjacent(int u, int v) const;
    /// Neighbourhood of v, without v itself.
    std::uint64_t adjacency_bits(int v) const;
    /// {v} together with its neighbourhood; equals orthogonal({v}).
    std::uint64_t star_bits(int v) const;
    std::uint64_t all_bits() const;

    int edge_count() const;
    /// Edges as (i,j) with i<j, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

    /// Structural fingerprint (names + adjacency); equal graphs share it.
    std::uint64_t fingerprint() const;

    bool operator==(const CommutationGraph& other) const;

    GeneratorSet empty_set() const;
    GeneratorSet full_set() const;
    GeneratorSet make_set(std::uint64_t bits) const;
    GeneratorSet set_of(const std::vector<int>& vertices) const;
    GeneratorSet set_of_names(const std::vector<std::string>& names) const;

    /// Generators commuting with every member of Y.  Self-commutation is
    /// granted, so y in Y never blocks y itself; orthogonal(empty) = X.
    GeneratorSet orthogonal(const GeneratorSet& y) const;
    std::uint64_t orthogonal_bits(std::uint64_t y) const;

    /// Generators adjacent to all other vertices: orthogonal(X).
    GeneratorSet center() const;

private:
    struct Data;
    explicit CommutationGraph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static std::shared_ptr<const Data> make(std::vector<std::string> names,
                                            const std::vector<std::pair<int, int>>& edges);
    std::shared_ptr<const Data> d_;
};

enum class GraphFormat { edges, dot };
enum class FamilyKind { semibraid, complete, empty };

/// Parse a graph from text.
///
/// edges format: optional leading line `vertices: n1 n2 ...`; edge lines
/// `edge u v` or bare `u v`; `#` starts a comment; blank lines ignored.
/// With a vertices header every endpoint must be declared; without one,
/// vertices are created in first-appearance order.
///
/// dot format: the undirected subset `graph [name] { a -- b; c; }`.
CommutationGraph parse_graph(std::string_view text, GraphFormat format);

/// Named graph on x1..xn.  semibraid joins xi,xj exactly when |i-j| >= 2.
CommutationGraph family(FamilyKind kind, int n);

/// Induced subgraph on X minus {x}; remaining vertex order preserved.
CommutationGraph delete_vertex(const CommutationGraph& g, int x);

/// Induced subgraph on the given vertices, order preserved.
CommutationGraph induced_subgraph(const CommutationGraph& g, const GeneratorSet& keep);

/// Add k new mutually non-adjacent vertices, each adjacent to every old one
/// (the graph of G x F_k).
CommutationGraph join_free(const CommutationGraph& g, int k);

/// Connected components of the complement graph restricted to S, ordered by
/// least vertex index.  Two generators are joined in the complement exactly
/// when they do not commute.
std::vector<GeneratorSet> non_commutation_components(const CommutationGraph& g,
                                                     const GeneratorSet& s);

} // namespace raag

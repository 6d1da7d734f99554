#include "raag/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace raag {

namespace {

// Element order: larger carriers first, ties by bit pattern.  Puts the top
// at index 0 and makes heights computable in one backward pass.
bool element_before(std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a);
    int pb = __builtin_popcountll(b);
    if (pa != pb)
        return pa > pb;
    return a < b;
}

} // namespace

CanonicalLattice CanonicalLattice::build(const CommutationGraph& g) {
    CanonicalLattice lat;
    lat.graph_ = g;
    const int n = g.size();

    // Every closed set is an intersection of stars with the full set, so a
    // breadth-first sweep over single-star cuts reaches the whole family.
    std::unordered_map<std::uint64_t, int> seen;
    std::vector<std::uint64_t> queue;
    queue.push_back(g.all_bits());
    seen.emplace(g.all_bits(), 0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::uint64_t s = queue[qi];
        for (int x = 0; x < n; ++x) {
            std::uint64_t t = s & g.star_bits(x);
            if (t != s && seen.emplace(t, 0).second)
                queue.push_back(t);
        }
    }

    lat.elements_ = queue;
    std::sort(lat.elements_.begin(), lat.elements_.end(), element_before);
    for (std::size_t i = 0; i < lat.elements_.size(); ++i)
        seen[lat.elements_[i]] = static_cast<int>(i);

    lat.top_ = 0;
    lat.bottom_ = static_cast<int>(lat.elements_.size()) - 1;

    lat.heights_.assign(lat.elements_.size(), 0);
    for (int i = lat.bottom_; i >= 0; --i) {
        std::uint64_t s = lat.elements_[static_cast<std::size_t>(i)];
        int h = 0;
        for (int x = 0; x < n; ++x) {
            std::uint64_t t = s & g.star_bits(x);
            if (t != s)
                h = std::max(h, 1 + lat.heights_[static_cast<std::size_t>(seen.at(t))]);
        }
        lat.heights_[static_cast<std::size_t>(i)] = h;
    }

    // Covers of s are the maximal sets among its single-star cuts.
    std::vector<std::uint64_t> cuts;
    for (int i = 0; i < static_cast<int>(lat.elements_.size()); ++i) {
        std::uint64_t s = lat.elements_[static_cast<std::size_t>(i)];
        cuts.clear();
        for (int x = 0; x < n; ++x) {
            std::uint64_t t = s & g.star_bits(x);
            if (t != s && std::find(cuts.begin(), cuts.end(), t) == cuts.end())
                cuts.push_back(t);
        }
        std::vector<int> lower;
        for (std::uint64_t t : cuts) {
            bool maximal = true;
            for (std::uint64_t other : cuts) {
                if (other != t && (t & ~other) == 0) {
                    maximal = false;
                    break;
                }
            }
            if (maximal)
                lower.push_back(seen.at(t));
        }
        std::sort(lower.begin(), lower.end());
        for (int j : lower)
            lat.hasse_.emplace_back(i, j);
    }
    return lat;
}

ClosedSet CanonicalLattice::at(int i) const {
    check_element(i);
    GeneratorSet carrier = graph_.make_set(elements_[static_cast<std::size_t>(i)]);
    return ClosedSet{carrier, graph_.orthogonal(carrier)};
}

std::uint64_t CanonicalLattice::carrier_bits(int i) const {
    check_element(i);
    return elements_[static_cast<std::size_t>(i)];
}

std::optional<int> CanonicalLattice::index_of_bits(std::uint64_t bits) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), bits, element_before);
    if (it == elements_.end() || *it != bits)
        return std::nullopt;
    return static_cast<int>(it - elements_.begin());
}

int CanonicalLattice::height_of(int i) const {
    check_element(i);
    return heights_[static_cast<std::size_t>(i)];
}

int CanonicalLattice::require_index(std::uint64_t bits) const {
    auto i = index_of_bits(bits);
    if (!i)
        throw DomainError("set is not an element of the lattice");
    return *i;
}

void CanonicalLattice::check_element(int i) const {
    if (i < 0 || i >= size())
        throw DomainError("lattice element index out of range");
}

int CanonicalLattice::meet(int a, int b) const {
    check_element(a);
    check_element(b);
    return require_index(elements_[static_cast<std::size_t>(a)] &
                         elements_[static_cast<std::size_t>(b)]);
}

int CanonicalLattice::join(int a, int b) const {
    check_element(a);
    check_element(b);
    std::uint64_t u = elements_[static_cast<std::size_t>(a)] |
                      elements_[static_cast<std::size_t>(b)];
    // Least closed superset: the double orthogonal.
    return require_index(graph_.orthogonal_bits(graph_.orthogonal_bits(u)));
}

std::vector<int> CanonicalLattice::covers_below(int i) const {
    check_element(i);
    std::vector<int> out;
    for (auto [upper, lower] : hasse_)
        if (upper == i)
            out.push_back(lower);
    return out;
}

int cdim(const CommutationGraph& g) { return CanonicalLattice::build(g).height(); }

MaxChain max_chain(const CommutationGraph& g) {
    CanonicalLattice lat = CanonicalLattice::build(g);
    MaxChain out;
    int current = lat.top();
    out.sets.push_back(lat.at(current));
    while (lat.height_of(current) > 0) {
        std::uint64_t s = lat.carrier_bits(current);
        int step = -1;
        for (int x = 0; x < g.size() && step < 0; ++x) {
            std::uint64_t t = s & g.star_bits(x);
            if (t == s)
                continue;
            int next = *lat.index_of_bits(t);
            if (lat.height_of(next) == lat.height_of(current) - 1)
                step = x;
        }
        // A height-realizing generator step always exists below a
        // non-bottom element.
        out.witness.push_back(step);
        current = *lat.index_of_bits(s & g.star_bits(step));
        out.sets.push_back(lat.at(current));
    }
    return out;
}

namespace {

int descend(const CommutationGraph& g, std::uint64_t s,
            std::unordered_map<std::uint64_t, int>& memo) {
    auto it = memo.find(s);
    if (it != memo.end())
        return it->second;
    int best = 0;
    for (int x = 0; x < g.size(); ++x) {
        std::uint64_t t = s & g.star_bits(x);
        if (t != s)
            best = std::max(best, 1 + descend(g, t, memo));
    }
    memo.emplace(s, best);
    return best;
}

} // namespace

int brute_force_cdim(const CommutationGraph& g) {
    if (g.size() > 12)
        throw DomainError("brute_force_cdim is guarded to at most 12 vertices");
    std::unordered_map<std::uint64_t, int> memo;
    return descend(g, g.all_bits(), memo);
}

} // namespace raag

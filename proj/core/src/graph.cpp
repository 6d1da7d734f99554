#include "raag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace raag {

struct CommutationGraph::Data {
    std::vector<std::string> names;
    std::vector<std::uint64_t> adj;  // neighbourhood without self
    std::vector<std::uint64_t> star; // neighbourhood with self
    std::uint64_t all = 0;
    std::uint64_t fp = 0;
    std::unordered_map<std::string, int> index;
};

namespace {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

void validate_name(const std::string& name) {
    if (name.empty())
        throw ParseError("empty vertex name");
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '^' || c == '-' || c == '#')
            throw ParseError("invalid character in vertex name '" + name + "'");
    }
}

} // namespace

std::shared_ptr<const CommutationGraph::Data>
CommutationGraph::make(std::vector<std::string> names,
                       const std::vector<std::pair<int, int>>& edges) {
    auto d = std::make_shared<CommutationGraph::Data>();
    const int n = static_cast<int>(names.size());
    if (n > kMaxVertices)
        throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is " +
                            std::to_string(kMaxVertices));
    for (int i = 0; i < n; ++i) {
        validate_name(names[i]);
        if (!d->index.emplace(names[i], i).second)
            throw ParseError("duplicate vertex '" + names[i] + "'");
    }
    d->names = std::move(names);
    d->adj.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("edge endpoint out of range");
        if (u == v)
            throw ParseError("self-loop at vertex '" + d->names[static_cast<std::size_t>(u)] + "'");
        d->adj[static_cast<std::size_t>(u)] |= 1ull << v;
        d->adj[static_cast<std::size_t>(v)] |= 1ull << u;
    }
    d->star.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        d->star[static_cast<std::size_t>(i)] = d->adj[static_cast<std::size_t>(i)] | (1ull << i);
    d->all = n == 64 ? ~0ull : (1ull << n) - 1;

    std::uint64_t h = 1469598103934665603ull;
    h = fnv1a(&n, sizeof n, h);
    for (const auto& name : d->names) {
        h = fnv1a(name.data(), name.size(), h);
        h = fnv1a("\x1f", 1, h);
    }
    for (auto row : d->adj)
        h = fnv1a(&row, sizeof row, h);
    d->fp = h;
    return d;
}

CommutationGraph::CommutationGraph() {
    static const std::shared_ptr<const Data> empty = make({}, {});
    d_ = empty;
}

CommutationGraph::CommutationGraph(std::vector<std::string> names,
                                   const std::vector<std::pair<int, int>>& edges)
    : d_(make(std::move(names), edges)) {}

CommutationGraph CommutationGraph::from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u)
                edges.emplace_back(i, j);
    return CommutationGraph(std::move(names), edges);
}

int CommutationGraph::size() const { return static_cast<int>(d_->names.size()); }

const std::string& CommutationGraph::name(int v) const {
    if (v < 0 || v >= size())
        throw DomainError("vertex index out of range");
    return d_->names[static_cast<std::size_t>(v)];
}

const std::vector<std::string>& CommutationGraph::names() const { return d_->names; }

std::optional<int> CommutationGraph::index_of(std::string_view name) const {
    auto it = d_->index.find(std::string(name));
    if (it == d_->index.end())
        return std::nullopt;
    return it->second;
}

bool CommutationGraph::adjacent(int u, int v) const {
    return (adjacency_bits(u) >> v) & 1u;
}

std::uint64_t CommutationGraph::adjacency_bits(int v) const {
    if (v < 0 || v >= size())
        throw DomainError("vertex index out of range");
    return d_->adj[static_cast<std::size_t>(v)];
}

std::uint64_t CommutationGraph::star_bits(int v) const {
    if (v < 0 || v >= size())
        throw DomainError("vertex index out of range");
    return d_->star[static_cast<std::size_t>(v)];
}

std::uint64_t CommutationGraph::all_bits() const { return d_->all; }

int CommutationGraph::edge_count() const {
    int total = 0;
    for (auto row : d_->adj)
        total += __builtin_popcountll(row);
    return total / 2;
}

std::vector<std::pair<int, int>> CommutationGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (adjacent(i, j))
                out.emplace_back(i, j);
    return out;
}

std::uint64_t CommutationGraph::fingerprint() const { return d_->fp; }

bool CommutationGraph::operator==(const CommutationGraph& other) const {
    return d_ == other.d_ ||
           (d_->fp == other.d_->fp && d_->names == other.d_->names && d_->adj == other.d_->adj);
}

GeneratorSet CommutationGraph::empty_set() const { return GeneratorSet(0, d_->fp); }
GeneratorSet CommutationGraph::full_set() const { return GeneratorSet(d_->all, d_->fp); }

GeneratorSet CommutationGraph::make_set(std::uint64_t bits) const {
    if (bits & ~d_->all)
        throw DomainError("set contains bits outside the vertex range");
    return GeneratorSet(bits, d_->fp);
}

GeneratorSet CommutationGraph::set_of(const std::vector<int>& vertices) const {
    std::uint64_t bits = 0;
    for (int v : vertices) {
        if (v < 0 || v >= size())
            throw DomainError("vertex index out of range");
        bits |= 1ull << v;
    }
    return GeneratorSet(bits, d_->fp);
}

GeneratorSet CommutationGraph::set_of_names(const std::vector<std::string>& names) const {
    std::uint64_t bits = 0;
    for (const auto& name : names) {
        auto i = index_of(name);
        if (!i)
            throw DomainError("unknown vertex '" + name + "'");
        bits |= 1ull << *i;
    }
    return GeneratorSet(bits, d_->fp);
}

std::uint64_t CommutationGraph::orthogonal_bits(std::uint64_t y) const {
    std::uint64_t out = d_->all;
    for (std::uint64_t b = y; b; b &= b - 1)
        out &= d_->star[static_cast<std::size_t>(__builtin_ctzll(b))];
    return out;
}

GeneratorSet CommutationGraph::orthogonal(const GeneratorSet& y) const {
    if (y.graph_fingerprint() != d_->fp)
        throw DomainError("generator set is bound to a different graph");
    return GeneratorSet(orthogonal_bits(y.bits()), d_->fp);
}

GeneratorSet CommutationGraph::center() const {
    return GeneratorSet(orthogonal_bits(d_->all), d_->fp);
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

CommutationGraph parse_edges_format(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    bool have_header = false;
    bool seen_edges = false;

    auto resolve = [&](const std::string& token) -> int {
        auto it = index.find(token);
        if (it != index.end())
            return it->second;
        if (have_header)
            throw ParseError("edge endpoint '" + token + "' is not a declared vertex");
        validate_name(token);
        int i = static_cast<int>(names.size());
        names.push_back(token);
        index.emplace(token, i);
        return i;
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens[0] == "vertices:") {
            if (have_header)
                throw ParseError("duplicate vertices header");
            if (seen_edges)
                throw ParseError("vertices header must precede edge lines");
            if (tokens.size() == 1)
                throw ParseError("empty vertex list");
            have_header = true;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                validate_name(tokens[i]);
                if (!index.emplace(tokens[i], static_cast<int>(names.size())).second)
                    throw ParseError("duplicate vertex '" + tokens[i] + "'");
                names.push_back(tokens[i]);
            }
            continue;
        }
        seen_edges = true;
        std::string u, v;
        if (tokens[0] == "edge") {
            if (tokens.size() != 3)
                throw ParseError("edge line must be 'edge u v'");
            u = tokens[1];
            v = tokens[2];
        } else {
            if (tokens.size() != 2)
                throw ParseError("edge line must name exactly two vertices");
            u = tokens[0];
            v = tokens[1];
        }
        if (u == v)
            throw ParseError("self-loop at vertex '" + u + "'");
        edges.emplace_back(resolve(u), resolve(v));
    }
    if (names.empty())
        throw ParseError("empty vertex list");
    return CommutationGraph(std::move(names), edges);
}

std::vector<std::string> tokenize_dot(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    auto is_id = [](char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' &&
               c != ';' && c != '-' && c != '[' && c != ']' && c != ',';
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (c == '{' || c == '}' || c == ';' || c == '[' || c == ']' || c == ',') {
            tokens.emplace_back(1, c);
            ++i;
        } else if (c == '-') {
            if (i + 1 < text.size() && text[i + 1] == '-') {
                tokens.emplace_back("--");
                i += 2;
            } else {
                throw ParseError("unexpected '-' in dot input (directed edges unsupported)");
            }
        } else {
            std::size_t j = i;
            while (j < text.size() && is_id(text[j]))
                ++j;
            tokens.emplace_back(text.substr(i, j - i));
            i = j;
        }
    }
    return tokens;
}

CommutationGraph parse_dot_format(std::string_view text) {
    auto tokens = tokenize_dot(text);
    std::size_t i = 0;
    auto expect = [&](std::string_view what) {
        if (i >= tokens.size() || tokens[i] != what)
            throw ParseError("dot input: expected '" + std::string(what) + "'");
        ++i;
    };
    if (i < tokens.size() && tokens[i] == "strict")
        ++i;
    if (i >= tokens.size())
        throw ParseError("dot input: empty");
    if (tokens[i] == "digraph")
        throw ParseError("dot input: directed graphs unsupported");
    expect("graph");
    if (i < tokens.size() && tokens[i] != "{")
        ++i; // optional graph name
    expect("{");

    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    auto resolve = [&](const std::string& token) -> int {
        auto it = index.find(token);
        if (it != index.end())
            return it->second;
        validate_name(token);
        int v = static_cast<int>(names.size());
        names.push_back(token);
        index.emplace(token, v);
        return v;
    };
    while (i < tokens.size() && tokens[i] != "}") {
        if (tokens[i] == ";") {
            ++i;
            continue;
        }
        if (tokens[i] == "[")
            throw ParseError("dot input: attributes unsupported");
        int prev = resolve(tokens[i]);
        ++i;
        while (i < tokens.size() && tokens[i] == "--") {
            ++i;
            if (i >= tokens.size() || tokens[i] == ";" || tokens[i] == "}")
                throw ParseError("dot input: dangling edge operator");
            int next = resolve(tokens[i]);
            if (next == prev)
                throw ParseError("self-loop at vertex '" + tokens[i] + "'");
            edges.emplace_back(prev, next);
            prev = next;
            ++i;
        }
    }
    expect("}");
    if (names.empty())
        throw ParseError("empty vertex list");
    return CommutationGraph(std::move(names), edges);
}

} // namespace

CommutationGraph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::edges:
        return parse_edges_format(text);
    case GraphFormat::dot:
        return parse_dot_format(text);
    }
    throw ParseError("unknown graph format");
}

CommutationGraph family(FamilyKind kind, int n) {
    if (n < 1)
        throw DomainError("family size must be positive");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool edge = false;
            switch (kind) {
            case FamilyKind::semibraid: edge = j - i >= 2; break;
            case FamilyKind::complete: edge = true; break;
            case FamilyKind::empty: edge = false; break;
            }
            if (edge)
                edges.emplace_back(i, j);
        }
    }
    return CommutationGraph(std::move(names), edges);
}

CommutationGraph induced_subgraph(const CommutationGraph& g, const GeneratorSet& keep) {
    if (keep.graph_fingerprint() != g.fingerprint())
        throw DomainError("generator set is bound to a different graph");
    std::vector<int> old_index = keep.members();
    std::vector<std::string> names;
    names.reserve(old_index.size());
    for (int v : old_index)
        names.push_back(g.name(v));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < old_index.size(); ++i)
        for (std::size_t j = i + 1; j < old_index.size(); ++j)
            if (g.adjacent(old_index[i], old_index[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return CommutationGraph(std::move(names), edges);
}

CommutationGraph delete_vertex(const CommutationGraph& g, int x) {
    if (x < 0 || x >= g.size())
        throw DomainError("unknown vertex");
    return induced_subgraph(g, g.make_set(g.all_bits() & ~(1ull << x)));
}

CommutationGraph join_free(const CommutationGraph& g, int k) {
    if (k < 1)
        throw DomainError("join_free requires k >= 1");
    const int n = g.size();
    std::vector<std::string> names = g.names();
    for (int i = 1; i <= k; ++i) {
        std::string candidate = "f" + std::to_string(i);
        while (std::find(names.begin(), names.end(), candidate) != names.end())
            candidate.insert(candidate.begin(), 'f');
        names.push_back(candidate);
    }
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v)
            edges.emplace_back(v, n + i);
    return CommutationGraph(std::move(names), edges);
}

std::vector<GeneratorSet> non_commutation_components(const CommutationGraph& g,
                                                     const GeneratorSet& s) {
    if (s.graph_fingerprint() != g.fingerprint())
        throw DomainError("generator set is bound to a different graph");
    std::vector<GeneratorSet> out;
    std::uint64_t todo = s.bits();
    while (todo) {
        int seed = __builtin_ctzll(todo);
        std::uint64_t comp = 0;
        std::uint64_t frontier = 1ull << seed;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b; b &= b - 1) {
                int v = __builtin_ctzll(b);
                // complement-graph neighbours within s
                next |= s.bits() & ~g.star_bits(v);
            }
            frontier = next & ~comp;
        }
        out.push_back(g.make_set(comp));
        todo &= ~comp;
    }
    return out;
}

} // namespace raag

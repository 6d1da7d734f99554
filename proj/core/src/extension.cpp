#include "raag/extension.hpp"

#include <algorithm>

namespace raag {

namespace {

// Drop bit position x and close the gap.
std::uint64_t squeeze_bit(std::uint64_t bits, int x) {
    std::uint64_t low = bits & ((1ull << x) - 1);
    std::uint64_t high = x == 63 ? 0 : (bits >> (x + 1)) << x;
    return low | high;
}

void check_vertex(const CommutationGraph& g, int x) {
    if (x < 0 || x >= g.size())
        throw DomainError("unknown vertex");
}

// Shared context for lock/tie analysis of systems over delete_vertex(g, x).
struct DeletionContext {
    const CommutationGraph& g;
    int x;
    CommutationGraph gx;
    std::uint64_t y_bits = 0; // in gx index space
    std::uint64_t w_bits = 0;

    DeletionContext(const CommutationGraph& graph, int vertex)
        : g(graph), x(vertex), gx(delete_vertex(graph, vertex)) {
        for (int i = 0; i < gx.size(); ++i) {
            int orig = i < x ? i : i + 1;
            if (g.adjacent(orig, x))
                y_bits |= 1ull << i;
            else
                w_bits |= 1ull << i;
        }
    }

    void check_system(const ParameterSystem& p) const {
        if (p.graph.fingerprint() != gx.fingerprint())
            throw DomainError("parameter system is not over the vertex-deleted graph");
    }

    std::optional<LockInfo> lock(const ParameterSystem& p) const {
        int l = 0;
        while (l < p.length() && ((y_bits >> p.sequence[static_cast<std::size_t>(l)]) & 1u))
            ++l;
        std::uint64_t keys = 0;
        std::uint64_t c_l = p.chain[static_cast<std::size_t>(l)];
        for (std::uint64_t b = w_bits; b; b &= b - 1) {
            int w = __builtin_ctzll(b);
            if ((c_l & ~gx.star_bits(w)) == 0)
                keys |= 1ull << w;
        }
        if (keys == 0)
            return std::nullopt;
        return LockInfo{l, gx.make_set(keys)};
    }

    std::optional<TieInfo> tie(const ParameterSystem& p) const {
        const int n = p.length();
        int k = -1;
        for (int i = n; i >= 0; --i) {
            if (p.chain[static_cast<std::size_t>(i)] & ~y_bits) {
                k = i;
                break;
            }
        }
        if (k < 0)
            return std::nullopt; // every chain set lies in Y, so W is empty
        TieInfo info;
        info.position = k;
        if (k < n) {
            std::uint64_t dropped = p.chain[static_cast<std::size_t>(k)] &
                                    ~p.chain[static_cast<std::size_t>(k + 1)];
            info.t1a = (dropped & y_bits) != 0;
            bool prefix_in_y = true;
            for (int i = 0; i < k && prefix_in_y; ++i)
                prefix_in_y = ((y_bits >> p.sequence[static_cast<std::size_t>(i)]) & 1u) != 0;
            info.t2 = prefix_in_y &&
                      ((w_bits >> p.sequence[static_cast<std::size_t>(k)]) & 1u) != 0;
        } else {
            info.t1b = (p.chain[static_cast<std::size_t>(n)] & w_bits) != 0;
        }
        if (!info.t1a && !info.t1b && !info.t2)
            return std::nullopt;
        return info;
    }

    LockTieReport analyze(const ParameterSystem& p) const {
        LockTieReport report;
        report.vertex = x;
        report.y_set = gx.make_set(y_bits);
        report.w_set = gx.make_set(w_bits);
        report.locked = lock(p);
        report.right_locked = report.locked.has_value();
        report.tied = tie(p);
        return report;
    }

    int to_g(int gx_vertex) const { return gx_vertex < x ? gx_vertex : gx_vertex + 1; }
};

} // namespace

std::pair<GeneratorSet, GeneratorSet> partition_yw(const CommutationGraph& g, int x) {
    check_vertex(g, x);
    std::uint64_t y = g.adjacency_bits(x);
    std::uint64_t w = g.all_bits() & ~g.star_bits(x);
    return {g.make_set(y), g.make_set(w)};
}

std::optional<ParameterSystem> is_parameter_system(const CommutationGraph& g,
                                                   std::span<const int> sequence) {
    std::uint64_t seen = 0;
    for (int v : sequence) {
        check_vertex(g, v);
        if ((seen >> v) & 1u)
            throw DomainError("repeated vertex in parameter sequence");
        seen |= 1ull << v;
    }
    ParameterSystem p{g, {sequence.begin(), sequence.end()}, {}};
    p.chain.reserve(sequence.size() + 1);
    p.chain.push_back(g.all_bits());
    for (int v : sequence) {
        std::uint64_t next = p.chain.back() & g.star_bits(v);
        if (next == p.chain.back())
            return std::nullopt;
        p.chain.push_back(next);
    }
    return p;
}

std::optional<LockInfo> lock_status(const ParameterSystem& p, const CommutationGraph& g, int x) {
    check_vertex(g, x);
    DeletionContext ctx(g, x);
    ctx.check_system(p);
    return ctx.lock(p);
}

std::optional<TieInfo> tie_status(const ParameterSystem& p, const CommutationGraph& g, int x) {
    check_vertex(g, x);
    DeletionContext ctx(g, x);
    ctx.check_system(p);
    return ctx.tie(p);
}

LockTieReport analyze_system(const ParameterSystem& p, const CommutationGraph& g, int x) {
    check_vertex(g, x);
    DeletionContext ctx(g, x);
    ctx.check_system(p);
    return ctx.analyze(p);
}

ParameterSystem build_s(const ParameterSystem& q, const CommutationGraph& g, int x,
                        const LockTieReport& report) {
    check_vertex(g, x);
    DeletionContext ctx(g, x);
    ctx.check_system(q);

    const int n = q.length();
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n) + 2);
    auto append_range = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            seq.push_back(ctx.to_g(q.sequence[static_cast<std::size_t>(i)]));
    };

    const bool locked = report.locked.has_value();
    const bool tied = report.tied.has_value();
    if (locked && tied && !report.tied->t2) {
        int l = report.locked->position;
        int k = report.tied->position;
        int key = ctx.to_g(report.locked->keys.members().front());
        if (k <= l) {
            append_range(0, k);
            seq.push_back(x);
            append_range(k, l);
            seq.push_back(key);
            append_range(l, n);
        } else {
            append_range(0, l);
            seq.push_back(key);
            append_range(l, k);
            seq.push_back(x);
            append_range(k, n);
        }
    } else if (locked && !tied) {
        int l = report.locked->position;
        append_range(0, l);
        seq.push_back(ctx.to_g(report.locked->keys.members().front()));
        append_range(l, n);
    } else if (tied) {
        int k = report.tied->position;
        append_range(0, k);
        seq.push_back(x);
        append_range(k, n);
    } else {
        append_range(0, n);
    }

    auto result = is_parameter_system(g, seq);
    if (!result)
        throw DomainError("extended sequence is not a parameter system");
    return *result;
}

namespace {

struct MaximalDfs {
    const CommutationGraph& g;
    const CanonicalLattice& lat;
    std::uint64_t cap;
    const std::function<bool(const ParameterSystem&)>& visit;
    EnumerationStats stats;
    std::vector<int> seq;
    std::vector<std::uint64_t> chain;

    bool run(std::uint64_t s, int h) {
        if (++stats.nodes > cap) {
            stats.truncated = true;
            return false;
        }
        if (h == 0)
            return visit(ParameterSystem{g, seq, chain});
        for (int x = 0; x < g.size(); ++x) {
            std::uint64_t t = s & g.star_bits(x);
            if (t == s || lat.height_of(*lat.index_of_bits(t)) != h - 1)
                continue;
            seq.push_back(x);
            chain.push_back(t);
            bool keep_going = run(t, h - 1);
            seq.pop_back();
            chain.pop_back();
            if (!keep_going)
                return false;
        }
        return true;
    }
};

struct ShortCenterDfs {
    const CommutationGraph& g;
    const CanonicalLattice& lat;
    std::uint64_t cap;
    const std::function<bool(const ParameterSystem&)>& visit;
    EnumerationStats stats;
    std::vector<int> seq;
    std::vector<std::uint64_t> chain;

    bool run(std::uint64_t s, int h, bool skipped) {
        if (++stats.nodes > cap) {
            stats.truncated = true;
            return false;
        }
        if (h == 0)
            return !skipped || visit(ParameterSystem{g, seq, chain});
        for (int x = 0; x < g.size(); ++x) {
            std::uint64_t t = s & g.star_bits(x);
            if (t == s)
                continue;
            int drop = h - lat.height_of(*lat.index_of_bits(t));
            if (drop != 1 && (drop != 2 || skipped))
                continue;
            seq.push_back(x);
            chain.push_back(t);
            bool keep_going = run(t, h - drop, skipped || drop == 2);
            seq.pop_back();
            chain.pop_back();
            if (!keep_going)
                return false;
        }
        return true;
    }
};

} // namespace

EnumerationStats enumerate_maximal_parameter_systems(
    const CommutationGraph& g, std::uint64_t cap,
    const std::function<bool(const ParameterSystem&)>& visit) {
    CanonicalLattice lat = CanonicalLattice::build(g);
    MaximalDfs dfs{g, lat, cap, visit, {}, {}, {g.all_bits()}};
    dfs.run(g.all_bits(), lat.height());
    return dfs.stats;
}

std::vector<ParameterSystem> collect_maximal_parameter_systems(const CommutationGraph& g,
                                                               std::uint64_t cap,
                                                               EnumerationStats* stats) {
    std::vector<ParameterSystem> out;
    auto st = enumerate_maximal_parameter_systems(g, cap, [&](const ParameterSystem& p) {
        out.push_back(p);
        return true;
    });
    if (stats)
        *stats = st;
    return out;
}

EnumerationStats enumerate_short_center_systems(
    const CommutationGraph& g, std::uint64_t cap,
    const std::function<bool(const ParameterSystem&)>& visit) {
    CanonicalLattice lat = CanonicalLattice::build(g);
    if (lat.height() == 0)
        return {};
    ShortCenterDfs dfs{g, lat, cap, visit, {}, {}, {g.all_bits()}};
    dfs.run(g.all_bits(), lat.height(), false);
    return dfs.stats;
}

QuickChecks quick_checks(const CommutationGraph& g, int x) {
    check_vertex(g, x);
    QuickChecks out;
    CommutationGraph gx = delete_vertex(g, x);
    std::uint64_t cg = g.orthogonal_bits(g.all_bits());
    std::uint64_t cgx = gx.orthogonal_bits(gx.all_bits());

    if (!((cg >> x) & 1u)) {
        std::uint64_t cg_in_gx = squeeze_bit(cg, x);
        out.c1a = (cg_in_gx & ~cgx) == 0 && cg_in_gx != cgx;
    }

    std::uint64_t y_in_gx = squeeze_bit(g.adjacency_bits(x), x);
    out.c1b = cdim(induced_subgraph(gx, gx.make_set(y_in_gx))) == cdim(gx);

    auto [y, w] = partition_yw(g, x);
    bool product = true;
    for (int a : y.members()) {
        for (int b : w.members()) {
            if (!g.adjacent(a, b)) {
                product = false;
                break;
            }
        }
        if (!product)
            break;
    }
    out.c2a = product && induced_subgraph(g, w).center().empty();

    // The largest candidate witness decides 2b: any S with the same
    // centraliser as x is contained in it.
    std::uint64_t star_x = g.star_bits(x);
    std::uint64_t t = g.orthogonal_bits(star_x) & ~(1ull << x);
    if (g.orthogonal_bits(t) == star_x) {
        out.c2b = true;
        out.s_witness = g.make_set(t);
    } else {
        out.s_witness = g.empty_set();
    }
    return out;
}

const char* to_string(DeltaClause clause) {
    switch (clause) {
    case DeltaClause::c1: return "1";
    case DeltaClause::c2a: return "2a";
    case DeltaClause::c2b: return "2b";
    case DeltaClause::c3: return "3";
    }
    return "?";
}

ExtensionReport classify_extension(const CommutationGraph& g, int x, std::uint64_t cap) {
    check_vertex(g, x);
    ExtensionReport report;
    report.vertex = x;
    DeletionContext ctx(g, x);
    report.cdim_with = cdim(g);
    report.cdim_without = cdim(ctx.gx);
    report.delta = report.cdim_with - report.cdim_without;
    report.quick = quick_checks(g, x);

    if (report.delta == 0) {
        report.clause = DeltaClause::c3;
        return report;
    }

    std::optional<ExtensionWitness> clause1;
    std::optional<ExtensionWitness> clause2a;
    report.search = enumerate_maximal_parameter_systems(
        ctx.gx, cap, [&](const ParameterSystem& p) {
            LockTieReport lt = ctx.analyze(p);
            bool is_clause1 = lt.locked.has_value() && lt.t1_exclusive();
            if (is_clause1 && !clause1)
                clause1 = ExtensionWitness{p, lt};
            if (!is_clause1 && (lt.locked || lt.tied) && !clause2a)
                clause2a = ExtensionWitness{p, lt};
            if (report.delta == 2)
                return !clause1.has_value();
            return !clause2a.has_value();
        });

    if (report.delta == 2) {
        report.clause = DeltaClause::c1;
        if (clause1)
            report.witnesses.push_back(std::move(*clause1));
        else
            report.witnesses_incomplete = report.search.truncated;
        return report;
    }

    if (clause2a) {
        report.clause = DeltaClause::c2a;
        report.witnesses.push_back(std::move(*clause2a));
        return report;
    }
    std::optional<ExtensionWitness> clause2b;
    EnumerationStats short_stats = enumerate_short_center_systems(
        ctx.gx, cap, [&](const ParameterSystem& p) {
            LockTieReport lt = ctx.analyze(p);
            if (lt.locked.has_value() && lt.t1_exclusive()) {
                clause2b = ExtensionWitness{p, lt};
                return false;
            }
            return true;
        });
    report.search.nodes += short_stats.nodes;
    report.search.truncated = report.search.truncated || short_stats.truncated;
    if (clause2b) {
        report.clause = DeltaClause::c2b;
        report.witnesses.push_back(std::move(*clause2b));
    } else {
        report.clause = DeltaClause::c2a;
        report.witnesses_incomplete = report.search.truncated;
    }
    return report;
}

} // namespace raag

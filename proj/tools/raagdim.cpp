#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "raag/centraliser.hpp"
#include "raag/extension.hpp"
#include "raag/graph.hpp"
#include "raag/lattice.hpp"
#include "raag/word.hpp"

using json = nlohmann::ordered_json;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read '" + path + "'");
    return buf.str();
}

std::string digest_hex(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

void emit_envelope(const std::string& command, const std::string& digest, json result,
                   const std::vector<std::string>& warnings) {
    json envelope;
    envelope["command"] = command;
    envelope["input_digest"] = digest;
    envelope["result"] = std::move(result);
    envelope["warnings"] = warnings;
    std::cout << envelope.dump(2) << "\n";
}

raag::GraphFormat parse_format(const std::string& name) {
    if (name == "edges")
        return raag::GraphFormat::edges;
    if (name == "dot")
        return raag::GraphFormat::dot;
    throw raag::ParseError("unknown format '" + name + "'");
}

struct GraphInput {
    raag::CommutationGraph graph;
    std::string digest;
};

GraphInput load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    return GraphInput{raag::parse_graph(text, parse_format(format)), digest_hex(text)};
}

json names_json(const raag::CommutationGraph& g, const raag::GeneratorSet& s) {
    json out = json::array();
    for (int v : s.members())
        out.push_back(g.name(v));
    return out;
}

std::string set_to_string(const raag::CommutationGraph& g, std::uint64_t bits) {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t b = bits; b; b &= b - 1) {
        if (!first)
            out += ",";
        out += g.name(__builtin_ctzll(b));
        first = false;
    }
    return out + "}";
}

std::string word_display(const raag::NormalForm& w) {
    return w.is_identity() ? "1" : raag::to_string(w);
}

int resolve_vertex(const raag::CommutationGraph& g, const std::string& name) {
    auto v = g.index_of(name);
    if (!v)
        throw raag::DomainError("unknown vertex '" + name + "'");
    return *v;
}

// ---------------------------------------------------------------- cdim

int cmd_cdim(const std::string& path, const std::string& format, bool as_json) {
    GraphInput in = load_graph(path, format);
    int dim = raag::cdim(in.graph);
    if (!as_json) {
        std::cout << "cdim = " << dim << "\n";
        return 0;
    }
    json result;
    result["vertices"] = in.graph.names();
    json edges = json::array();
    for (auto [a, b] : in.graph.edges())
        edges.push_back(json::array({in.graph.name(a), in.graph.name(b)}));
    result["edges"] = std::move(edges);
    result["cdim"] = dim;
    result["center"] = names_json(in.graph, in.graph.center());
    emit_envelope("cdim", in.digest, std::move(result), {});
    return 0;
}

// ---------------------------------------------------------------- chain

int cmd_chain(const std::string& path, const std::string& format, bool as_json) {
    GraphInput in = load_graph(path, format);
    raag::MaxChain chain = raag::max_chain(in.graph);
    int dim = static_cast<int>(chain.witness.size());
    if (!as_json) {
        std::cout << "cdim = " << dim << "\n";
        for (std::size_t i = 0; i < chain.sets.size(); ++i) {
            if (i)
                std::cout << " > ";
            std::cout << set_to_string(in.graph, chain.sets[i].carrier.bits());
        }
        std::cout << "\n";
        std::cout << "witness:";
        for (int v : chain.witness)
            std::cout << " " << in.graph.name(v);
        std::cout << "\n";
        return 0;
    }
    json result;
    result["cdim"] = dim;
    json sets = json::array();
    for (const auto& cs : chain.sets)
        sets.push_back(names_json(in.graph, cs.carrier));
    result["sets"] = std::move(sets);
    json witness = json::array();
    for (int v : chain.witness)
        witness.push_back(in.graph.name(v));
    result["witness"] = std::move(witness);
    emit_envelope("chain", in.digest, std::move(result), {});
    return 0;
}

// ---------------------------------------------------------------- lattice

void write_dot(const raag::CommutationGraph& g, const raag::CanonicalLattice& lat,
               std::ostream& out) {
    out << "graph lattice {\n";
    for (int i = 0; i < lat.size(); ++i)
        out << "  n" << i << " [label=\"" << set_to_string(g, lat.carrier_bits(i)) << "\"];\n";
    for (auto [upper, lower] : lat.hasse_edges())
        out << "  n" << upper << " -- n" << lower << ";\n";
    out << "}\n";
}

int cmd_lattice(const std::string& path, const std::string& format, bool as_json,
                const std::string& dot_path) {
    GraphInput in = load_graph(path, format);
    raag::CanonicalLattice lat = raag::CanonicalLattice::build(in.graph);
    if (!dot_path.empty()) {
        if (dot_path == "-") {
            write_dot(in.graph, lat, std::cout);
        } else {
            std::ofstream out(dot_path);
            if (!out)
                throw IoError("cannot open '" + dot_path + "' for writing");
            write_dot(in.graph, lat, out);
            out.flush();
            if (!out)
                throw IoError("failed writing '" + dot_path + "'");
        }
    }
    if (!as_json) {
        std::cout << "elements = " << lat.size() << "\n";
        std::cout << "height = " << lat.height() << "\n";
        std::cout << "top = " << set_to_string(in.graph, lat.carrier_bits(lat.top())) << "\n";
        std::cout << "bottom = " << set_to_string(in.graph, lat.carrier_bits(lat.bottom()))
                  << "\n";
        return 0;
    }
    json result;
    result["cdim"] = lat.height();
    result["top"] = lat.top();
    result["bottom"] = lat.bottom();
    json elements = json::array();
    for (int i = 0; i < lat.size(); ++i) {
        raag::ClosedSet cs = lat.at(i);
        json e;
        e["carrier"] = names_json(in.graph, cs.carrier);
        e["witness"] = names_json(in.graph, cs.witness);
        e["height"] = lat.height_of(i);
        elements.push_back(std::move(e));
    }
    result["elements"] = std::move(elements);
    json hasse = json::array();
    for (auto [upper, lower] : lat.hasse_edges())
        hasse.push_back(json::array({upper, lower}));
    result["hasse"] = std::move(hasse);
    emit_envelope("lattice", in.digest, std::move(result), {});
    return 0;
}

// ---------------------------------------------------------------- delta

json system_json(const raag::ParameterSystem& p) {
    json out = json::array();
    for (int v : p.sequence)
        out.push_back(p.graph.name(v));
    return out;
}

json lock_tie_json(const raag::LockTieReport& rep, const raag::CommutationGraph& gx) {
    json out;
    out["y"] = names_json(gx, rep.y_set);
    out["w"] = names_json(gx, rep.w_set);
    if (rep.locked) {
        out["locked_at"] = rep.locked->position;
        out["keys"] = names_json(gx, rep.locked->keys);
        out["right_locked"] = rep.right_locked;
    } else {
        out["locked_at"] = nullptr;
    }
    if (rep.tied) {
        out["tied_at"] = rep.tied->position;
        json types = json::array();
        if (rep.tied->t1a)
            types.push_back("T1a");
        if (rep.tied->t1b)
            types.push_back("T1b");
        if (rep.tied->t2)
            types.push_back("T2");
        out["tie_types"] = std::move(types);
    } else {
        out["tied_at"] = nullptr;
    }
    return out;
}

std::vector<std::string> quick_names(const raag::QuickChecks& q) {
    std::vector<std::string> out;
    if (q.c1a)
        out.push_back("1a");
    if (q.c1b)
        out.push_back("1b");
    if (q.c2a)
        out.push_back("2a");
    if (q.c2b)
        out.push_back("2b");
    return out;
}

int cmd_delta(const std::string& path, const std::string& format, const std::string& vertex,
              bool as_json, bool explain, std::uint64_t cap) {
    GraphInput in = load_graph(path, format);
    int x = resolve_vertex(in.graph, vertex);
    raag::ExtensionReport rep = raag::classify_extension(in.graph, x, cap);
    raag::CommutationGraph gx = raag::delete_vertex(in.graph, x);

    std::vector<std::string> warnings;
    if (rep.witnesses_incomplete)
        warnings.push_back("witness search truncated before confirming the clause");
    else if (rep.delta != 0 && rep.witnesses.empty())
        warnings.push_back("no explanatory witness found (unexpected)");

    if (!as_json) {
        std::cout << "delta = " << rep.delta << " (cdim " << rep.cdim_with << " with "
                  << vertex << ", " << rep.cdim_without << " without)\n";
        std::cout << "clause = " << raag::to_string(rep.clause) << "\n";
        std::cout << "quick checks:";
        for (const auto& name : quick_names(rep.quick))
            std::cout << " " << name;
        std::cout << "\n";
        if (explain) {
            for (const auto& witness : rep.witnesses) {
                std::cout << "witness system (without " << vertex << "):";
                for (int v : witness.system.sequence)
                    std::cout << " " << gx.name(v);
                std::cout << "\n";
                if (witness.report.locked) {
                    std::cout << "  locked at " << witness.report.locked->position << ", keys:";
                    for (int v : witness.report.locked->keys.members())
                        std::cout << " " << gx.name(v);
                    std::cout << "\n";
                }
                if (witness.report.tied) {
                    std::cout << "  tied at " << witness.report.tied->position << " (";
                    std::string sep;
                    if (witness.report.tied->t1a) {
                        std::cout << "T1a";
                        sep = ",";
                    }
                    if (witness.report.tied->t1b) {
                        std::cout << sep << "T1b";
                        sep = ",";
                    }
                    if (witness.report.tied->t2)
                        std::cout << sep << "T2";
                    std::cout << ")\n";
                }
            }
        }
        for (const auto& w : warnings)
            std::cout << "warning: " << w << "\n";
        return 0;
    }
    json result;
    result["vertex"] = vertex;
    result["cdim"] = rep.cdim_with;
    result["cdim_without_vertex"] = rep.cdim_without;
    result["delta"] = rep.delta;
    result["clause"] = raag::to_string(rep.clause);
    result["quick_checks"] = quick_names(rep.quick);
    if (rep.quick.c2b)
        result["quick_check_2b_witness"] = names_json(in.graph, rep.quick.s_witness);
    if (rep.witnesses.empty()) {
        result["witness"] = nullptr;
    } else {
        json w = lock_tie_json(rep.witnesses.front().report, gx);
        w["system"] = system_json(rep.witnesses.front().system);
        result["witness"] = std::move(w);
    }
    json search;
    search["nodes"] = rep.search.nodes;
    search["truncated"] = rep.search.truncated;
    result["search"] = std::move(search);
    result["witnesses_incomplete"] = rep.witnesses_incomplete;
    emit_envelope("delta", in.digest, std::move(result), warnings);
    return 0;
}

// ---------------------------------------------------------------- word

int cmd_word(const std::string& op, const std::string& path, const std::string& format,
             const std::vector<std::string>& words, bool as_json) {
    GraphInput in = load_graph(path, format);
    auto need = [&](std::size_t count) {
        if (words.size() != count)
            throw raag::ParseError("word " + op + " expects " + std::to_string(count) +
                                   " word argument(s)");
    };
    json result;
    std::ostringstream text;
    if (op == "normalize") {
        need(1);
        raag::NormalForm w = raag::parse_word(in.graph, words[0]);
        text << word_display(w) << "\n";
        result["word"] = raag::to_string(w);
        result["length"] = w.length();
        result["alpha"] = names_json(in.graph, w.support());
    } else if (op == "equal") {
        need(2);
        bool eq = raag::parse_word(in.graph, words[0]) == raag::parse_word(in.graph, words[1]);
        text << (eq ? "true" : "false") << "\n";
        result["equal"] = eq;
    } else if (op == "centralizer") {
        need(1);
        raag::CentraliserDescription desc =
            raag::centraliser_of_element(raag::parse_word(in.graph, words[0]));
        text << "conjugator: " << word_display(desc.conjugator) << "\n";
        for (const auto& part : desc.cyclic_parts)
            text << "cyclic part: " << raag::to_string(part.root) << " (exponent "
                 << part.exponent << ")\n";
        text << "abelianizing: " << set_to_string(in.graph, desc.abelianizing.bits()) << "\n";
        if (desc.whole_group)
            text << "whole group\n";
        result["conjugator"] = raag::to_string(desc.conjugator);
        json parts = json::array();
        for (const auto& part : desc.cyclic_parts) {
            json p;
            p["root"] = raag::to_string(part.root);
            p["exponent"] = part.exponent;
            parts.push_back(std::move(p));
        }
        result["cyclic_parts"] = std::move(parts);
        result["abelianizing"] = names_json(in.graph, desc.abelianizing);
        result["whole_group"] = desc.whole_group;
    } else if (op == "root") {
        need(1);
        raag::Root r = raag::root(raag::parse_word(in.graph, words[0]));
        text << "root = " << raag::to_string(r.base) << "\n";
        text << "exponent = " << r.exponent << "\n";
        result["root"] = raag::to_string(r.base);
        result["exponent"] = r.exponent;
    } else if (op == "blocks") {
        need(1);
        raag::BlockDecomposition bd =
            raag::block_decomposition(raag::parse_word(in.graph, words[0]));
        text << "conjugator: " << word_display(bd.conjugator) << "\n";
        for (const auto& block : bd.blocks)
            text << "block: " << raag::to_string(block) << "\n";
        result["conjugator"] = raag::to_string(bd.conjugator);
        json blocks = json::array();
        for (const auto& block : bd.blocks)
            blocks.push_back(raag::to_string(block));
        result["blocks"] = std::move(blocks);
    } else if (op == "cyclic") {
        need(1);
        raag::NormalForm w = raag::parse_word(in.graph, words[0]);
        raag::CyclicReduction cr = raag::cyclic_reduce(w);
        auto perms = raag::cyclic_permutations(cr.core);
        text << "cyclically minimal: " << word_display(cr.core) << "\n";
        text << "conjugator: " << word_display(cr.conjugator) << "\n";
        text << "class size = " << perms.size() << "\n";
        result["core"] = raag::to_string(cr.core);
        result["conjugator"] = raag::to_string(cr.conjugator);
        result["was_cyclically_minimal"] = cr.conjugator.is_identity();
        json cls = json::array();
        for (const auto& p : perms)
            cls.push_back(raag::to_string(p));
        result["cyclic_class"] = std::move(cls);
    } else {
        throw raag::ParseError("unknown word operation '" + op + "'");
    }
    if (as_json)
        emit_envelope("word " + op, in.digest, std::move(result), {});
    else
        std::cout << text.str();
    return 0;
}

// ---------------------------------------------------------------- scan

std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

int cmd_scan(int max_n, const std::string& check, int samples, std::uint64_t seed,
             bool as_json) {
    if (max_n < 1 || max_n > 12)
        throw raag::DomainError("scan supports max-n between 1 and 12");
    const bool needs_oracle = check == "oracle";
    if (needs_oracle && max_n > 12)
        throw raag::DomainError("oracle scan is guarded to max-n 12");
    if (check != "forbidden-dims" && check != "delta-bound" && check != "oracle" &&
        check != "joinf2")
        throw raag::ParseError("unknown check '" + check + "'");

    std::map<int, std::uint64_t> histogram;
    std::vector<json> counterexamples;
    std::uint64_t scanned = 0;
    std::mt19937_64 rng(seed);

    auto run_one = [&](const raag::CommutationGraph& g, int n, std::uint64_t mask) {
        ++scanned;
        int dim = raag::cdim(g);
        ++histogram[dim];
        auto record = [&](const std::string& detail) {
            if (counterexamples.size() < 10) {
                json ce;
                ce["n"] = n;
                ce["edge_mask"] = mask;
                ce["detail"] = detail;
                counterexamples.push_back(std::move(ce));
            } else if (counterexamples.size() == 10) {
                counterexamples.push_back(json("..."));
            }
        };
        if (check == "forbidden-dims") {
            if (dim == 1 || dim == 3)
                record("cdim = " + std::to_string(dim));
        } else if (check == "delta-bound") {
            for (int x = 0; x < n; ++x) {
                int d = dim - raag::cdim(raag::delete_vertex(g, x));
                if (d < 0 || d > 2)
                    record("vertex " + g.name(x) + ": delta = " + std::to_string(d));
            }
        } else if (check == "oracle") {
            int ref = raag::brute_force_cdim(g);
            if (dim != ref)
                record("cdim = " + std::to_string(dim) + ", oracle = " + std::to_string(ref));
        } else if (check == "joinf2") {
            int shifted = raag::cdim(raag::join_free(g, 2));
            if (shifted != dim + 2)
                record("cdim = " + std::to_string(dim) +
                       ", after joining two free generators = " + std::to_string(shifted));
        }
    };

    for (int n = 1; n <= max_n; ++n) {
        if (n <= 6) {
            std::uint64_t total = 1ull << pair_count(n);
            for (std::uint64_t mask = 0; mask < total; ++mask)
                run_one(raag::CommutationGraph::from_edge_mask(n, mask), n, mask);
        } else {
            std::uint64_t all = pair_count(n) >= 64 ? ~0ull : (1ull << pair_count(n)) - 1;
            for (int i = 0; i < samples; ++i) {
                std::uint64_t mask = rng() & all;
                run_one(raag::CommutationGraph::from_edge_mask(n, mask), n, mask);
            }
        }
    }

    if (!as_json) {
        std::cout << "check = " << check << "\n";
        std::cout << "seed = " << seed << "\n";
        std::cout << "graphs = " << scanned << "\n";
        std::cout << "counterexamples = "
                  << (counterexamples.size() > 10 ? std::string(">10")
                                                  : std::to_string(counterexamples.size()))
                  << "\n";
        for (const auto& ce : counterexamples)
            std::cout << "  " << ce.dump() << "\n";
        std::cout << "cdim histogram:";
        for (auto [dim, count] : histogram)
            std::cout << " " << dim << ":" << count;
        std::cout << "\n";
        return counterexamples.empty() ? 0 : 1;
    }
    json result;
    result["check"] = check;
    result["max_n"] = max_n;
    result["samples_per_n"] = samples;
    result["seed"] = seed;
    result["graphs_scanned"] = scanned;
    result["counterexamples"] = counterexamples;
    json hist;
    for (auto [dim, count] : histogram)
        hist[std::to_string(dim)] = count;
    result["histogram"] = std::move(hist);
    std::string params = "scan --check " + check + " --max-n " + std::to_string(max_n) +
                         " --samples " + std::to_string(samples) + " --seed " +
                         std::to_string(seed);
    emit_envelope("scan", digest_hex(params), std::move(result), {});
    return counterexamples.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- family

int cmd_family(const std::string& kind_name, int n, const std::string& out_path, bool as_json) {
    raag::FamilyKind kind;
    if (kind_name == "semibraid")
        kind = raag::FamilyKind::semibraid;
    else if (kind_name == "complete")
        kind = raag::FamilyKind::complete;
    else if (kind_name == "empty")
        kind = raag::FamilyKind::empty;
    else
        throw raag::ParseError("unknown family '" + kind_name + "'");
    raag::CommutationGraph g = raag::family(kind, n);

    std::ostringstream text;
    text << "vertices:";
    for (const auto& name : g.names())
        text << " " << name;
    text << "\n";
    for (auto [a, b] : g.edges())
        text << "edge " << g.name(a) << " " << g.name(b) << "\n";

    if (out_path.empty() || out_path == "-") {
        std::cout << text.str();
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw IoError("cannot open '" + out_path + "' for writing");
        out << text.str();
        out.flush();
        if (!out)
            throw IoError("failed writing '" + out_path + "'");
    }
    if (as_json) {
        json result;
        result["kind"] = kind_name;
        result["n"] = n;
        result["vertices"] = g.names();
        result["edge_count"] = g.edge_count();
        result["path"] = out_path.empty() ? "-" : out_path;
        emit_envelope("family", digest_hex(text.str()), std::move(result), {});
    } else if (!out_path.empty() && out_path != "-") {
        std::cout << "wrote " << kind_name << " graph on " << n << " vertices ("
                  << g.edge_count() << " edges) to " << out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"centraliser structure of partially commutative groups"};
    app.require_subcommand(1);

    std::string path, format = "edges", vertex, dot_path, out_path, op, check = "oracle";
    std::string family_kind;
    std::vector<std::string> words;
    bool as_json = false, explain = false;
    int max_n = 5, samples = 500, n = 1;
    std::uint64_t seed = 12345, cap = 1000000;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "graph file")->required();
        cmd->add_option("--format", format, "input format: edges or dot")
            ->default_str("edges");
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    CLI::App* c_cdim = app.add_subcommand("cdim", "centraliser dimension of a graph group");
    add_graph_opts(c_cdim);

    CLI::App* c_chain = app.add_subcommand("chain", "a longest canonical centraliser chain");
    add_graph_opts(c_chain);

    CLI::App* c_lattice = app.add_subcommand("lattice", "the canonical centraliser lattice");
    add_graph_opts(c_lattice);
    c_lattice->add_option("--dot", dot_path, "write the Hasse diagram as DOT ('-' = stdout)");

    CLI::App* c_delta = app.add_subcommand("delta", "effect of deleting one vertex");
    add_graph_opts(c_delta);
    c_delta->add_option("--vertex", vertex, "vertex to analyze")->required();
    c_delta->add_flag("--explain", explain, "print witness systems");
    c_delta->add_option("--cap", cap, "witness search node budget");

    CLI::App* c_word = app.add_subcommand("word", "word engine operations");
    c_word->add_option("op", op, "normalize | equal | centralizer | root | blocks | cyclic")
        ->required();
    c_word->add_option("file", path, "graph file")->required();
    c_word->add_option("words", words, "word arguments (tokens: name or name^-1)");
    c_word->add_option("--format", format, "input format: edges or dot")->default_str("edges");
    c_word->add_flag("--json", as_json, "machine-readable output");

    CLI::App* c_scan = app.add_subcommand("scan", "property scan over small graphs");
    c_scan->add_option("--max-n", max_n, "largest vertex count")->required();
    c_scan->add_option("--check", check, "forbidden-dims | delta-bound | oracle | joinf2")
        ->required();
    c_scan->add_option("--samples", samples, "random graphs per n above 6");
    c_scan->add_option("--seed", seed, "random seed (echoed in output)");
    c_scan->add_flag("--json", as_json, "machine-readable output");

    CLI::App* c_family = app.add_subcommand("family", "emit a named graph family");
    c_family->add_option("kind", family_kind, "semibraid | complete | empty")->required();
    c_family->add_option("n", n, "number of generators")->required();
    c_family->add_option("--out", out_path, "output file (default stdout)");
    c_family->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_cdim->parsed())
            return cmd_cdim(path, format, as_json);
        if (c_chain->parsed())
            return cmd_chain(path, format, as_json);
        if (c_lattice->parsed())
            return cmd_lattice(path, format, as_json, dot_path);
        if (c_delta->parsed())
            return cmd_delta(path, format, vertex, as_json, explain, cap);
        if (c_word->parsed())
            return cmd_word(op, path, format, words, as_json);
        if (c_scan->parsed())
            return cmd_scan(max_n, check, samples, seed, as_json);
        if (c_family->parsed())
            return cmd_family(family_kind, n, out_path, as_json);
    } catch (const raag::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const raag::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const raag::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

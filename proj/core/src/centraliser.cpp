#include "raag/centraliser.hpp"

#include <algorithm>
#include <numeric>

namespace raag {

namespace {

// Depth-first search over left divisors of exact target length, canonical
// letter order first so the first hit is deterministic.
bool find_power_root(const CommutationGraph& g, const std::vector<Letter>& residual,
                     std::vector<Letter>& prefix, std::size_t target, int exponent,
                     const NormalForm& w, NormalForm& out) {
    if (prefix.size() == target) {
        NormalForm v = normalize(g, prefix);
        if (power(v, exponent) == w) {
            out = v;
            return true;
        }
        return false;
    }
    NormalForm rest = normalize(g, residual);
    for (Letter y : left_divisor_letters(rest)) {
        std::vector<Letter> next = strip_left_letter(rest, y).letters();
        prefix.push_back(y);
        if (find_power_root(g, next, prefix, target, exponent, w, out))
            return true;
        prefix.pop_back();
    }
    return false;
}

} // namespace

BlockDecomposition block_decomposition(const NormalForm& g) {
    CyclicReduction cr = cyclic_reduce(g);
    BlockDecomposition out{cr.conjugator, {}};
    auto components = non_commutation_components(g.graph(), cr.core.support());
    for (const GeneratorSet& comp : components) {
        std::vector<Letter> letters;
        for (Letter letter : cr.core.letters())
            if (comp.contains(letter.generator))
                letters.push_back(letter);
        out.blocks.push_back(normalize(g.graph(), letters));
    }
    return out;
}

Root block_root_exponent(const NormalForm& w) {
    if (!is_cyclically_minimal(w))
        throw DomainError("block_root_exponent requires a cyclically minimal input");
    auto components = non_commutation_components(w.graph(), w.support());
    if (components.size() != 1)
        throw DomainError("block_root_exponent requires a connected non-commutation support");
    const int len = w.length();
    for (int m = len; m >= 2; --m) {
        if (len % m != 0)
            continue;
        std::vector<Letter> prefix;
        NormalForm found(w.graph());
        if (find_power_root(w.graph(), w.letters(), prefix,
                            static_cast<std::size_t>(len / m), m, w, found))
            return Root{found, m};
    }
    return Root{w, 1};
}

Root root(const NormalForm& g) {
    if (g.is_identity())
        throw DomainError("the identity has no root");
    BlockDecomposition bd = block_decomposition(g);
    std::vector<Root> parts;
    parts.reserve(bd.blocks.size());
    int m = 0;
    for (const NormalForm& block : bd.blocks) {
        parts.push_back(block_root_exponent(block));
        m = std::gcd(m, parts.back().exponent);
    }
    std::vector<Letter> core;
    for (const Root& part : parts) {
        NormalForm piece = power(part.base, part.exponent / m);
        core.insert(core.end(), piece.letters().begin(), piece.letters().end());
    }
    NormalForm base = conjugate(normalize(g.graph(), core), bd.conjugator);
    return Root{base, m};
}

GeneratorSet a_of(const CommutationGraph& g, const std::vector<NormalForm>& words) {
    std::uint64_t support = 0;
    for (const NormalForm& w : words) {
        if (w.graph().fingerprint() != g.fingerprint())
            throw DomainError("word is bound to a different graph");
        support |= w.support_bits();
    }
    if (support == 0)
        return g.full_set();
    return g.make_set(g.orthogonal_bits(support) & ~support);
}

CentraliserDescription centraliser_of_element(const NormalForm& g) {
    if (g.is_identity())
        return CentraliserDescription{NormalForm(g.graph()), {}, g.graph().full_set(), true};
    CyclicReduction cr = cyclic_reduce(g);
    auto components = non_commutation_components(g.graph(), cr.core.support());
    CentraliserDescription out{cr.conjugator, {}, a_of(g.graph(), {cr.core}), false};
    for (const GeneratorSet& comp : components) {
        std::vector<Letter> letters;
        for (Letter letter : cr.core.letters())
            if (comp.contains(letter.generator))
                letters.push_back(letter);
        Root r = block_root_exponent(normalize(g.graph(), letters));
        out.cyclic_parts.push_back(CyclicPart{r.base, r.exponent});
    }
    return out;
}

bool commutes(const NormalForm& u, const NormalForm& v) {
    if (u.graph().fingerprint() != v.graph().fingerprint())
        throw DomainError("words are bound to different graphs");
    std::vector<Letter> raw;
    raw.reserve(2 * (u.letters().size() + v.letters().size()));
    auto append_inverse = [&raw](const NormalForm& w) {
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            raw.push_back(it->inverted());
    };
    append_inverse(u);
    append_inverse(v);
    raw.insert(raw.end(), u.letters().begin(), u.letters().end());
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return normalize(u.graph(), raw).is_identity();
}

} // namespace raag

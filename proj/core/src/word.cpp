#include "raag/word.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace raag {

namespace {

// [x,y] = 1 in the group: equal generators or adjacent ones.
bool commute(const CommutationGraph& g, int x, int y) {
    return x == y || g.adjacent(x, y);
}

// Multiply one letter into a minimal word, keeping it minimal: cancel
// against an occurrence of the inverse that can be commuted to the end,
// otherwise append.
void push_letter(const CommutationGraph& g, std::vector<Letter>& w, Letter letter) {
    for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
        if (w[static_cast<std::size_t>(p)].generator == letter.generator) {
            if (w[static_cast<std::size_t>(p)].inverse != letter.inverse) {
                w.erase(w.begin() + p);
                return;
            }
            break; // same sign: no cancellation possible
        }
        if (!g.adjacent(w[static_cast<std::size_t>(p)].generator, letter.generator))
            break; // dependent letter shields everything to its left
    }
    w.push_back(letter);
}

std::vector<Letter> reduce(const CommutationGraph& g, const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter letter : raw)
        push_letter(g, out, letter);
    return out;
}

// Positions whose letter can be commuted to the front: no earlier letter of
// the same generator and no earlier non-adjacent letter.
std::vector<int> minimal_positions(const CommutationGraph& g, const std::vector<Letter>& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool blocked = false;
        for (std::size_t j = 0; j < i && !blocked; ++j)
            blocked = w[j].generator == w[i].generator ||
                      !g.adjacent(w[j].generator, w[i].generator);
        if (!blocked)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> maximal_positions(const CommutationGraph& g, const std::vector<Letter>& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool blocked = false;
        for (std::size_t j = i + 1; j < w.size() && !blocked; ++j)
            blocked = w[j].generator == w[i].generator ||
                      !g.adjacent(w[j].generator, w[i].generator);
        if (!blocked)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

// Lexicographically least rearrangement reachable by commutations alone:
// repeatedly emit the least letter among the movable-to-front positions.
std::vector<Letter> lex_linearize(const CommutationGraph& g, std::vector<Letter> w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    std::vector<char> alive(w.size(), 1);
    for (std::size_t step = 0; step < w.size(); ++step) {
        int best = -1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!alive[i])
                continue;
            bool blocked = false;
            for (std::size_t j = 0; j < i && !blocked; ++j) {
                if (!alive[j])
                    continue;
                blocked = w[j].generator == w[i].generator ||
                          !g.adjacent(w[j].generator, w[i].generator);
            }
            if (!blocked && (best < 0 || w[i].value() < w[static_cast<std::size_t>(best)].value()))
                best = static_cast<int>(i);
        }
        out.push_back(w[static_cast<std::size_t>(best)]);
        alive[static_cast<std::size_t>(best)] = 0;
    }
    return out;
}

void check_letters(const CommutationGraph& g, const std::vector<Letter>& raw) {
    for (Letter letter : raw)
        if (letter.generator >= g.size())
            throw DomainError("unknown generator index in word");
}

void check_same_graph(const NormalForm& u, const NormalForm& v) {
    if (u.graph().fingerprint() != v.graph().fingerprint())
        throw DomainError("words are bound to different graphs");
}

// Erase the movable occurrence of a given divisor letter; w stays minimal.
void erase_left(const CommutationGraph& g, std::vector<Letter>& w, Letter y) {
    for (int i : minimal_positions(g, w)) {
        if (w[static_cast<std::size_t>(i)] == y) {
            w.erase(w.begin() + i);
            return;
        }
    }
    throw DomainError("letter is not a left divisor");
}

void erase_right(const CommutationGraph& g, std::vector<Letter>& w, Letter y) {
    for (int i : maximal_positions(g, w)) {
        if (w[static_cast<std::size_t>(i)] == y) {
            w.erase(w.begin() + i);
            return;
        }
    }
    throw DomainError("letter is not a right divisor");
}

std::vector<Letter> divisor_letters_at(const CommutationGraph& g,
                                       const std::vector<Letter>& w,
                                       const std::vector<int>& positions) {
    std::vector<Letter> out;
    for (int i : positions)
        out.push_back(w[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end(),
              [](Letter a, Letter b) { return a.value() < b.value(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

GeneratorSet NormalForm::support() const { return graph_.make_set(support_bits()); }

std::uint64_t NormalForm::support_bits() const {
    std::uint64_t bits = 0;
    for (Letter letter : letters_)
        bits |= 1ull << letter.generator;
    return bits;
}

bool operator<(const NormalForm& a, const NormalForm& b) {
    if (a.graph_.fingerprint() != b.graph_.fingerprint())
        return a.graph_.fingerprint() < b.graph_.fingerprint();
    return std::lexicographical_compare(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [](Letter x, Letter y) { return x.value() < y.value(); });
}

NormalForm normalize(const CommutationGraph& g, const std::vector<Letter>& raw) {
    check_letters(g, raw);
    NormalForm out(g);
    out.letters_ = lex_linearize(g, reduce(g, raw));
    return out;
}

std::vector<Letter> parse_letters(const CommutationGraph& g, std::string_view text) {
    std::vector<Letter> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j == i)
            break;
        std::string_view token = text.substr(i, j - i);
        i = j;
        bool inverse = false;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            if (token.substr(caret) != "^-1")
                throw ParseError("bad word token '" + std::string(token) +
                                 "' (expected name or name^-1)");
            inverse = true;
            token = token.substr(0, caret);
        }
        auto v = g.index_of(token);
        if (!v)
            throw DomainError("unknown generator '" + std::string(token) + "'");
        out.push_back(Letter{static_cast<std::uint8_t>(*v), inverse});
    }
    return out;
}

NormalForm parse_word(const CommutationGraph& g, std::string_view text) {
    return normalize(g, parse_letters(g, text));
}

std::string to_string(const CommutationGraph& g, Letter letter) {
    std::string out = g.name(letter.generator);
    if (letter.inverse)
        out += "^-1";
    return out;
}

std::string to_string(const NormalForm& w) {
    std::string out;
    for (Letter letter : w.letters()) {
        if (!out.empty())
            out += ' ';
        out += to_string(w.graph(), letter);
    }
    return out;
}

NormalForm multiply(const NormalForm& u, const NormalForm& v) {
    check_same_graph(u, v);
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return normalize(u.graph(), raw);
}

NormalForm invert(const NormalForm& u) {
    std::vector<Letter> raw(u.letters().rbegin(), u.letters().rend());
    for (Letter& letter : raw)
        letter.inverse = !letter.inverse;
    return normalize(u.graph(), raw);
}

NormalForm conjugate(const NormalForm& w, const NormalForm& g) {
    check_same_graph(w, g);
    std::vector<Letter> raw(g.letters().rbegin(), g.letters().rend());
    for (Letter& letter : raw)
        letter.inverse = !letter.inverse;
    raw.insert(raw.end(), w.letters().begin(), w.letters().end());
    raw.insert(raw.end(), g.letters().begin(), g.letters().end());
    return normalize(w.graph(), raw);
}

NormalForm power(const NormalForm& u, int n) {
    if (n < 0)
        return power(invert(u), -n);
    std::vector<Letter> raw;
    raw.reserve(u.letters().size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        raw.insert(raw.end(), u.letters().begin(), u.letters().end());
    return normalize(u.graph(), raw);
}

GeneratorSet alpha(const NormalForm& u) { return u.support(); }
int length(const NormalForm& u) { return u.length(); }

std::vector<Letter> left_divisor_letters(const NormalForm& u) {
    return divisor_letters_at(u.graph(), u.letters(), minimal_positions(u.graph(), u.letters()));
}

std::vector<Letter> right_divisor_letters(const NormalForm& u) {
    return divisor_letters_at(u.graph(), u.letters(), maximal_positions(u.graph(), u.letters()));
}

NormalForm strip_left_letter(const NormalForm& u, Letter y) {
    std::vector<Letter> w = u.letters();
    erase_left(u.graph(), w, y);
    return normalize(u.graph(), w);
}

NormalForm strip_right_letter(const NormalForm& u, Letter y) {
    std::vector<Letter> w = u.letters();
    erase_right(u.graph(), w, y);
    return normalize(u.graph(), w);
}

std::vector<NormalForm> left_divisors(const NormalForm& u) {
    std::set<NormalForm> seen;
    std::vector<std::pair<NormalForm, std::vector<Letter>>> queue;
    seen.insert(NormalForm(u.graph()));
    queue.emplace_back(NormalForm(u.graph()), u.letters());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [div, residual] = queue[qi];
        for (int p : minimal_positions(u.graph(), residual)) {
            std::vector<Letter> d = div.letters();
            d.push_back(residual[static_cast<std::size_t>(p)]);
            NormalForm next = normalize(u.graph(), d);
            if (!seen.insert(next).second)
                continue;
            std::vector<Letter> rest = residual;
            rest.erase(rest.begin() + p);
            queue.emplace_back(std::move(next), std::move(rest));
        }
    }
    return {seen.begin(), seen.end()};
}

NormalForm gcd_left(const NormalForm& u, const NormalForm& v) {
    check_same_graph(u, v);
    const CommutationGraph& g = u.graph();
    std::vector<Letter> a = u.letters();
    std::vector<Letter> b = v.letters();
    std::vector<Letter> acc;
    for (;;) {
        auto da = divisor_letters_at(g, a, minimal_positions(g, a));
        auto db = divisor_letters_at(g, b, minimal_positions(g, b));
        Letter pick{};
        bool found = false;
        for (Letter x : da) {
            if (std::find(db.begin(), db.end(), x) != db.end()) {
                pick = x;
                found = true;
                break;
            }
        }
        if (!found)
            break;
        erase_left(g, a, pick);
        erase_left(g, b, pick);
        acc.push_back(pick);
    }
    return normalize(g, acc);
}

NormalForm gcd_right(const NormalForm& u, const NormalForm& v) {
    return invert(gcd_left(invert(u), invert(v)));
}

NormalForm gcd_left_parabolic(const NormalForm& u, const GeneratorSet& y) {
    if (y.graph_fingerprint() != u.graph().fingerprint())
        throw DomainError("generator set is bound to a different graph");
    const CommutationGraph& g = u.graph();
    std::vector<Letter> a = u.letters();
    std::vector<Letter> acc;
    for (;;) {
        auto da = divisor_letters_at(g, a, minimal_positions(g, a));
        Letter pick{};
        bool found = false;
        for (Letter x : da) {
            if (y.contains(x.generator)) {
                pick = x;
                found = true;
                break;
            }
        }
        if (!found)
            break;
        erase_left(g, a, pick);
        acc.push_back(pick);
    }
    return normalize(g, acc);
}

namespace {

// Least letter that is simultaneously a left divisor with its inverse a
// right divisor; absent exactly when the word is cyclically minimal.
std::optional<Letter> cyclic_strip_candidate(const CommutationGraph& g,
                                             const std::vector<Letter>& w) {
    auto dl = divisor_letters_at(g, w, minimal_positions(g, w));
    auto dr = divisor_letters_at(g, w, maximal_positions(g, w));
    for (Letter y : dl)
        if (std::find(dr.begin(), dr.end(), y.inverted()) != dr.end())
            return y;
    return std::nullopt;
}

} // namespace

CyclicReduction cyclic_reduce(const NormalForm& w) {
    const CommutationGraph& g = w.graph();
    std::vector<Letter> core = w.letters();
    std::vector<Letter> conj;
    while (auto y = cyclic_strip_candidate(g, core)) {
        erase_right(g, core, y->inverted());
        erase_left(g, core, *y);
        conj.push_back(y->inverted());
    }
    std::reverse(conj.begin(), conj.end());
    return CyclicReduction{normalize(g, conj), normalize(g, core)};
}

bool is_cyclically_minimal(const NormalForm& w) {
    return !cyclic_strip_candidate(w.graph(), w.letters()).has_value();
}

std::vector<NormalForm> cyclic_permutations(const NormalForm& v) {
    if (!is_cyclically_minimal(v))
        throw DomainError("cyclic_permutations requires a cyclically minimal input");
    std::set<NormalForm> seen{v};
    std::vector<NormalForm> queue{v};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        NormalForm w = queue[qi];
        for (Letter y : left_divisor_letters(w)) {
            std::vector<Letter> rotated = strip_left_letter(w, y).letters();
            rotated.push_back(y);
            NormalForm next = normalize(v.graph(), rotated);
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

FactorSplit factor_split(const NormalForm& a, const NormalForm& b,
                         const NormalForm& c, const NormalForm& d) {
    check_same_graph(a, b);
    check_same_graph(a, c);
    check_same_graph(a, d);
    const CommutationGraph& g = a.graph();
    NormalForm ab = multiply(a, b);
    NormalForm cd = multiply(c, d);
    if (ab.length() != a.length() + b.length() || cd.length() != c.length() + d.length())
        throw DomainError("factor_split: factorizations are not length-additive");
    if (!(ab == cd))
        throw DomainError("factor_split: products differ");

    std::vector<NormalForm> candidates = left_divisors(c);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const NormalForm& x, const NormalForm& y) {
                         return x.length() > y.length();
                     });
    for (const NormalForm& c1 : candidates) {
        if (c1.length() > a.length())
            continue;
        NormalForm d1 = multiply(invert(c1), a);
        if (d1.length() != a.length() - c1.length())
            continue;
        NormalForm d2 = multiply(invert(d1), d);
        if (d2.length() != d.length() - d1.length())
            continue;
        NormalForm c2 = multiply(invert(c1), c);
        if (c2.length() + d2.length() != b.length() || !(multiply(c2, d2) == b))
            continue;
        bool commuting = true;
        for (int p : c2.support().members()) {
            for (int q : d1.support().members()) {
                if (!commute(g, p, q)) {
                    commuting = false;
                    break;
                }
            }
            if (!commuting)
                break;
        }
        if (commuting)
            return FactorSplit{c1, c2, d1, d2};
    }
    throw DomainError("factor_split: no refinement found");
}

} // namespace raag

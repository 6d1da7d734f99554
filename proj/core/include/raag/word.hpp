#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// One signed generator occurrence.
struct Letter {
    std::uint8_t generator = 0;
    bool inverse = false;

    Letter inverted() const { return {generator, !inverse}; }
    /// Total order used everywhere: generator index first, then + before -.
    int value() const { return generator * 2 + (inverse ? 1 : 0); }

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Canonical minimal word over X and the inverse generators, modulo the
/// commutation relations: the group-element representation.
///
/// Invariants: the stored letter sequence is of minimal length for the
/// element it represents (no commutation rearrangement exposes a cancelling
/// pair), and it is the lexicographically least rearrangement of that
/// minimal form (at each position the least letter that can be commuted to
/// the front is emitted).  Two words represent the same group element
/// exactly when their NormalForms compare equal.
class NormalForm {
public:
    /// Identity element of the group presented by g.
    explicit NormalForm(const CommutationGraph& g) : graph_(g) {}

    const CommutationGraph& graph() const { return graph_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty(); }

    /// Set of generators occurring in the word (invariant of the element).
    GeneratorSet support() const;
    std::uint64_t support_bits() const;

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.graph_.fingerprint() == b.graph_.fingerprint() && a.letters_ == b.letters_;
    }
    /// Lexicographic on (graph, letter values); gives containers a stable order.
    friend bool operator<(const NormalForm& a, const NormalForm& b);

private:
    friend NormalForm normalize(const CommutationGraph&, const std::vector<Letter>&);
    CommutationGraph graph_;
    std::vector<Letter> letters_;
};

/// Reduce a raw letter sequence to its NormalForm: cancellation until no
/// pair x^e ... x^-e with all intervening letters commuting with x remains,
/// then canonical linearization.  The result length is the element length;
/// equal group elements yield identical NormalForms.
NormalForm normalize(const CommutationGraph& g, const std::vector<Letter>& raw);

/// Parse whitespace-separated word tokens: `name` or `name^-1`.
NormalForm parse_word(const CommutationGraph& g, std::string_view text);
std::vector<Letter> parse_letters(const CommutationGraph& g, std::string_view text);

std::string to_string(const CommutationGraph& g, Letter letter);
std::string to_string(const NormalForm& w);

NormalForm multiply(const NormalForm& u, const NormalForm& v);
NormalForm invert(const NormalForm& u);
/// g^{-1} w g.
NormalForm conjugate(const NormalForm& w, const NormalForm& g);
NormalForm power(const NormalForm& u, int n);

GeneratorSet alpha(const NormalForm& u);
int length(const NormalForm& u);

/// Letters y such that some occurrence of y is preceded only by letters
/// commuting with y (equivalently, length-one left divisors of u).
std::vector<Letter> left_divisor_letters(const NormalForm& u);
std::vector<Letter> right_divisor_letters(const NormalForm& u);

/// u without one leading (trailing) occurrence of the given divisor letter.
NormalForm strip_left_letter(const NormalForm& u, Letter y);
NormalForm strip_right_letter(const NormalForm& u, Letter y);

/// All left divisors of u (elements d with u = d * (d^-1 u) and lengths
/// adding).  Exponential in the number of commuting splits; desk scale.
std::vector<NormalForm> left_divisors(const NormalForm& u);

/// Greatest common left (right) divisor.
NormalForm gcd_left(const NormalForm& u, const NormalForm& v);
NormalForm gcd_right(const NormalForm& u, const NormalForm& v);

/// Greatest left divisor of u with all letters in the parabolic subset Y.
NormalForm gcd_left_parabolic(const NormalForm& u, const GeneratorSet& y);

struct CyclicReduction {
    NormalForm conjugator; ///< u with input = u^-1 * core * u, lengths adding
    NormalForm core;       ///< cyclically minimal
};

/// Split w as u^-1 * core * u with the core cyclically minimal (no letter is
/// a left divisor while its inverse is a right divisor).  The least
/// qualifying letter is stripped at each step.
CyclicReduction cyclic_reduce(const NormalForm& w);

bool is_cyclically_minimal(const NormalForm& w);

/// The conjugacy-class slice realized by rotations: every t*s over the
/// factorizations v = s*t with lengths adding, as canonical forms (sorted).
/// Requires v cyclically minimal.
std::vector<NormalForm> cyclic_permutations(const NormalForm& v);

struct FactorSplit {
    NormalForm c1, c2, d1, d2;
};

/// For a*b = c*d (both factorizations length-additive), find the common
/// refinement a = c1*d1, b = c2*d2, c = c1*c2, d = d1*d2 with every letter
/// of c2 commuting with every letter of d1.
FactorSplit factor_split(const NormalForm& a, const NormalForm& b,
                         const NormalForm& c, const NormalForm& d);

} // namespace raag

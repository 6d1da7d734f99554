#pragma once

#include <vector>

#include "raag/word.hpp"

namespace raag {

/// g = conjugator^-1 * (blocks[0] ... blocks[k-1]) * conjugator, where the
/// blocks pairwise commute, each is cyclically minimal with connected
/// non-commutation graph on its support, and blocks are ordered by least
/// supported vertex.
struct BlockDecomposition {
    NormalForm conjugator;
    std::vector<NormalForm> blocks;
};

BlockDecomposition block_decomposition(const NormalForm& g);

struct Root {
    NormalForm base;
    int exponent = 1;
};

/// Unique root of g: base^exponent = g with the exponent maximal.
/// The identity has no root; passing it throws DomainError.
Root root(const NormalForm& g);

/// Root of a single block: for each divisor m of l(w) in decreasing order,
/// search left divisors v with l(v) = l(w)/m for v^m = w.
/// Requires w cyclically minimal with connected non-commutation support.
Root block_root_exponent(const NormalForm& w);

/// Generators outside the combined support of `words` commuting with all of
/// it; the whole vertex set when the combined support is empty.
GeneratorSet a_of(const CommutationGraph& g, const std::vector<NormalForm>& words);

struct CyclicPart {
    NormalForm root;  ///< cyclically minimal root block element
    int exponent = 1; ///< block = root^exponent
};

/// Structural description of the centraliser of one element: the subgroup
/// [ <v1> x ... x <vk> x G(abelianizing) ]^conjugator where vi are the block
/// roots of the cyclically minimal core.
struct CentraliserDescription {
    NormalForm conjugator;
    std::vector<CyclicPart> cyclic_parts;
    GeneratorSet abelianizing;
    bool whole_group = false; ///< set for the identity: the centraliser is G
};

CentraliserDescription centraliser_of_element(const NormalForm& g);

/// Normal-form test of [u,v] = 1.
bool commutes(const NormalForm& u, const NormalForm& v);

} // namespace raag

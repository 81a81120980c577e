#pragma once

#include <vector>

#include "mouldcalc/lincomb.hpp"
#include "mouldcalc/word.hpp"

namespace mouldcalc {

using WordLC = LinComb<Word>;
using WordTensor = Tensor<Word, Word>;

std::string word_lc_text(const WordLC& a);
std::string word_tensor_text(const WordTensor& t);

// Quasi-shuffle product: interleavings of u and v where adjacent letters from
// opposite sides may contract to their semigroup sum.
WordLC qsh(const Word& u, const Word& v);
WordLC qsh(const WordLC& a, const WordLC& b);
WordLC qsh_many(const std::vector<Word>& ws);

// The same product computed as a sum over (p,q)-quasi-shuffle surjections;
// must agree with the recursive form.
WordLC qsh_via_surjections(const Word& u, const Word& v);

// Ordinary shuffle: the contraction terms dropped.
WordLC shuffle(const Word& u, const Word& v);
WordLC shuffle(const WordLC& a, const WordLC& b);

// Deconcatenation coproduct: all |w|+1 prefix/suffix splits.
WordTensor deconcat(const Word& w);

// Internal (decomposition) coproduct: over each split of w into consecutive
// nonempty blocks, the word of block weights tensor the quasi-shuffle of the
// blocks. The empty word is group-like.
WordTensor gamma(const Word& w);
WordTensor gamma(const WordLC& a);

// Same coproduct summed over nondecreasing surjections; cross-check route.
WordTensor gamma_via_surjections(const Word& w);

Rational counit_delta(const Word& w);  // empty-word indicator
Rational counit_gamma(const Word& w);  // length <= 1 indicator

// Antipode of the quasi-shuffle Hopf algebra, by the left recursion
// S(w) = -w - sum over proper splits w = w'.w'' of S(w') qsh w''.
WordLC antipode(const Word& w);
WordLC antipode(const WordLC& a);
// Right recursion S(w) = -w - sum of w' qsh S(w''); equal by commutativity.
WordLC antipode_right(const Word& w);

// Appends the letter b: the word-side analogue of grafting on a new root.
WordLC append_letter(const WordLC& a, Letter b);

}  // namespace mouldcalc

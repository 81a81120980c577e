#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mouldcalc/lincomb.hpp"
#include "mouldcalc/quasishuffle.hpp"
#include "mouldcalc/word.hpp"

namespace mouldcalc {

// A decorated rooted tree in canonical form: children are kept sorted by the
// recursive order (decoration first, then child list), so isomorphic decorated
// trees compare equal structurally.
struct Tree {
    Letter dec;
    std::vector<Tree> children;

    static Tree make(Letter dec, std::vector<Tree> children = {});
    static Tree leaf(long long value) { return make(Letter{value}); }

    std::size_t vertex_count() const;
};

bool operator==(const Tree& a, const Tree& b);
bool operator<(const Tree& a, const Tree& b);
inline bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

// A multiset of trees, kept sorted. The empty forest is the algebra unit.
struct Forest {
    std::vector<Tree> trees;

    static Forest make(std::vector<Tree> trees);
    static Forest empty() { return Forest(); }
    static Forest single(Tree t) { return make({std::move(t)}); }

    bool is_empty() const { return trees.empty(); }
    std::size_t vertex_count() const;
    Letter weight() const;  // zero symbol for the empty forest

    // Grammar: tree := INT | INT "(" tree ("," tree)* ")"; forest := tree
    // ("*" tree)* and "1" for the empty forest. The one-vertex forest with
    // decoration 1 prints as "1()" so that printing stays invertible.
    static Forest parse(const std::string& text);
    std::string text() const;
};

bool operator==(const Forest& a, const Forest& b);
bool operator<(const Forest& a, const Forest& b);
inline bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }

using ForestLC = LinComb<Forest>;
using ForestTensor = Tensor<Forest, Forest>;
using TreeLC = LinComb<Tree>;

std::string forest_lc_text(const ForestLC& a);
std::string forest_tensor_text(const ForestTensor& t);

// Disjoint union (the free commutative product).
Forest forest_mul(const Forest& a, const Forest& b);
ForestLC forest_mul(const ForestLC& a, const ForestLC& b);

// Symmetry factor |Aut F|.
long long aut(const Forest& f);
long long aut(const Tree& t);

// Grafts all trees of the forest onto a new common root decorated b.
Tree bplus(Letter b, const Forest& f);

// Admissible-cut coproduct: over all splittings of the vertex set into a
// downward-closed trunk and its crown, crown (x) trunk.
ForestTensor forest_delta(const Forest& f);
ForestTensor forest_delta(const ForestLC& a);

// All covering subforests: one per subset of the edge set. Each entry is
// (G, F/G) with F/G contracting every connected block of G to a single vertex
// decorated by the semigroup sum of the block.
std::vector<std::pair<Forest, Forest>> covering_subforests(const Forest& f);

// Internal coproduct: sum of F/G (x) G over covering subforests.
ForestTensor forest_gamma(const Forest& f);
ForestTensor forest_gamma(const ForestLC& a);

Rational forest_counit(const Forest& f);  // empty-forest indicator

// Antipode for the admissible-cut coproduct, extended multiplicatively.
ForestLC forest_antipode(const Forest& f);
ForestLC forest_antipode(const ForestLC& a);

// Contracting arborification: the sum of all linear extensions of the forest
// poset with contractions of incomparable vertices allowed; every vertex
// letter appears after the letters of its subtree.
WordLC arborify(const Forest& f);
WordLC arborify(const ForestLC& a);

// Linear extensions only (no contractions); all words have |V(F)| letters.
WordLC arborify_simple(const Forest& f);

// Pre-Lie grafting: s attached below every vertex of t in turn.
TreeLC graft(const Tree& s, const Tree& t);
TreeLC graft(const TreeLC& a, const TreeLC& b);

// Grossman-Larson product: every tree of F is either attached to a vertex of
// G or left at root level, summed over all attachments.
ForestLC gl_product(const Forest& f, const Forest& g);
ForestLC gl_product(const ForestLC& a, const ForestLC& b);

// Enumeration in deterministic order (by vertex count, then canonically).
std::vector<Tree> trees_with_vertices(int n, const std::vector<Letter>& decorations);
std::vector<Forest> forests_with_vertices(int n, const std::vector<Letter>& decorations);
std::vector<Forest> forests_up_to_vertices(int max_vertices,
                                           const std::vector<Letter>& decorations);

}  // namespace mouldcalc

#include "mouldcalc/forest.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mouldcalc {

Tree Tree::make(Letter dec, std::vector<Tree> children) {
    Tree t;
    t.dec = dec;
    t.children = std::move(children);
    std::sort(t.children.begin(), t.children.end());
    return t;
}

std::size_t Tree::vertex_count() const {
    std::size_t n = 1;
    for (const Tree& c : children) n += c.vertex_count();
    return n;
}

bool operator==(const Tree& a, const Tree& b) {
    return a.dec == b.dec && a.children == b.children;
}

bool operator<(const Tree& a, const Tree& b) {
    if (a.dec != b.dec) return a.dec < b.dec;
    return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                        b.children.begin(), b.children.end());
}

Forest Forest::make(std::vector<Tree> trees) {
    Forest f;
    f.trees = std::move(trees);
    std::sort(f.trees.begin(), f.trees.end());
    return f;
}

std::size_t Forest::vertex_count() const {
    std::size_t n = 0;
    for (const Tree& t : trees) n += t.vertex_count();
    return n;
}

namespace {

Letter tree_weight(const Tree& t) {
    Letter w = t.dec;
    for (const Tree& c : t.children) w = combine(w, tree_weight(c));
    return w;
}

}  // namespace

Letter Forest::weight() const {
    Letter w{0};
    for (const Tree& t : trees) w = Letter{w.value + tree_weight(t).value};
    return w;
}

bool operator==(const Forest& a, const Forest& b) { return a.trees == b.trees; }

bool operator<(const Forest& a, const Forest& b) {
    return std::lexicographical_compare(a.trees.begin(), a.trees.end(),
                                        b.trees.begin(), b.trees.end());
}

namespace {

struct ForestParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (start == pos)
            throw std::invalid_argument("Forest: expected decoration at position " +
                                        std::to_string(start) + " in '" + s + "'");
        long long v = std::stoll(s.substr(start, pos - start));
        if (v <= 0) throw std::invalid_argument("Forest: decorations must be positive");
        return v;
    }

    Tree parse_tree() {
        long long dec = parse_int();
        std::vector<Tree> children;
        skip_ws();
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            skip_ws();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;  // "d()" is a bare vertex
            } else {
                children.push_back(parse_tree());
                skip_ws();
                while (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    children.push_back(parse_tree());
                    skip_ws();
                }
                if (pos >= s.size() || s[pos] != ')')
                    throw std::invalid_argument("Forest: expected ')' in '" + s + "'");
                ++pos;
            }
        }
        return Tree::make(Letter{dec}, std::move(children));
    }
};

std::string tree_text(const Tree& t) {
    std::string out = letter_text(t.dec);
    if (!t.children.empty()) {
        out += "(";
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i) out += ",";
            out += tree_text(t.children[i]);
        }
        out += ")";
    }
    return out;
}

}  // namespace

Forest Forest::parse(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (c != ' ') trimmed += c;
    if (trimmed == "1") return Forest::empty();
    ForestParser p{trimmed};
    std::vector<Tree> trees;
    trees.push_back(p.parse_tree());
    p.skip_ws();
    while (p.pos < trimmed.size() && trimmed[p.pos] == '*') {
        ++p.pos;
        trees.push_back(p.parse_tree());
        p.skip_ws();
    }
    if (p.pos != trimmed.size())
        throw std::invalid_argument("Forest: trailing input in '" + text + "'");
    return Forest::make(std::move(trees));
}

std::string Forest::text() const {
    if (trees.empty()) return "1";
    if (trees.size() == 1 && trees[0].children.empty() && trees[0].dec.value == 1)
        return "1()";  // keep distinct from the empty forest
    std::string out;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i) out += "*";
        out += tree_text(trees[i]);
    }
    return out;
}

std::string forest_lc_text(const ForestLC& a) {
    return lincomb_text(a, [](const Forest& f) { return f.text(); });
}

std::string forest_tensor_text(const ForestTensor& t) {
    return lincomb_text(t, [](const std::pair<Forest, Forest>& p) {
        return p.first.text() + "(x)" + p.second.text();
    });
}

Forest forest_mul(const Forest& a, const Forest& b) {
    std::vector<Tree> trees = a.trees;
    trees.insert(trees.end(), b.trees.begin(), b.trees.end());
    return Forest::make(std::move(trees));
}

ForestLC forest_mul(const ForestLC& a, const ForestLC& b) {
    ForestLC r;
    for (const auto& [f, cf] : a)
        for (const auto& [g, cg] : b)
            r.add_term(forest_mul(f, g), cf * cg);
    return r;
}

long long aut(const Tree& t) { return aut(Forest::make(t.children)); }

long long aut(const Forest& f) {
    long long result = 1;
    std::size_t i = 0;
    while (i < f.trees.size()) {
        std::size_t j = i;
        while (j < f.trees.size() && f.trees[j] == f.trees[i]) ++j;
        long long mult = static_cast<long long>(j - i);
        for (long long k = 2; k <= mult; ++k) result *= k;
        long long a = aut(f.trees[i]);
        for (long long k = 0; k < mult; ++k) result *= a;
        i = j;
    }
    return result;
}

Tree bplus(Letter b, const Forest& f) { return Tree::make(b, f.trees); }

// ---------------------------------------------------------------------------
// Flattened view: vertices in preorder (parents before children), parent -1
// for roots. All cut/subforest enumeration happens on this form.

namespace {

struct FlatForest {
    std::vector<Letter> dec;
    std::vector<int> parent;

    int size() const { return static_cast<int>(dec.size()); }
};

void flatten_tree(const Tree& t, int parent, FlatForest& out) {
    int id = out.size();
    out.dec.push_back(t.dec);
    out.parent.push_back(parent);
    for (const Tree& c : t.children) flatten_tree(c, id, out);
}

FlatForest flatten(const Forest& f) {
    FlatForest out;
    for (const Tree& t : f.trees) flatten_tree(t, -1, out);
    return out;
}

// Rebuilds the canonical forest on a vertex subset, keeping only edges with
// both ends in the subset.
Forest restrict_to(const FlatForest& flat, const std::vector<bool>& keep) {
    int n = flat.size();
    std::vector<std::vector<int>> kids(n);
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        int p = flat.parent[v];
        if (p >= 0 && keep[p])
            kids[p].push_back(v);
        else
            roots.push_back(v);
    }
    // parents precede children in preorder, so building bottom-up works
    std::vector<Tree> built(n);
    for (int v = n - 1; v >= 0; --v) {
        if (!keep[v]) continue;
        std::vector<Tree> ch;
        for (int c : kids[v]) ch.push_back(built[c]);
        built[v] = Tree::make(flat.dec[v], std::move(ch));
    }
    std::vector<Tree> trees;
    for (int r : roots) trees.push_back(built[r]);
    return Forest::make(std::move(trees));
}

std::vector<bool> mask_bits(std::uint64_t mask, int n) {
    std::vector<bool> keep(n, false);
    for (int v = 0; v < n; ++v)
        if (mask & (std::uint64_t{1} << v)) keep[v] = true;
    return keep;
}

Forest unflatten(const FlatForest& flat) {
    return restrict_to(flat, std::vector<bool>(flat.size(), true));
}

// Subset enumerations below are exponential; refuse sizes that could not
// finish anyway rather than overflowing the mask.
void guard_enumeration(int n, const char* what) {
    if (n > 24)
        throw std::invalid_argument(std::string(what) +
                                    ": forest too large for subset enumeration");
}

}  // namespace

ForestTensor forest_delta(const Forest& f) {
    ForestTensor t;
    FlatForest flat = flatten(f);
    int n = flat.size();
    guard_enumeration(n, "forest_delta");
    for (std::uint64_t trunk = 0; trunk < (std::uint64_t{1} << n); ++trunk) {
        bool closed = true;  // trunk must contain the parent of each of its vertices
        for (int v = 0; v < n && closed; ++v)
            if ((trunk & (std::uint64_t{1} << v)) && flat.parent[v] >= 0 &&
                !(trunk & (std::uint64_t{1} << flat.parent[v])))
                closed = false;
        if (!closed) continue;
        std::vector<bool> trunk_bits = mask_bits(trunk, n);
        std::vector<bool> crown_bits = trunk_bits;
        crown_bits.flip();
        t.add_term({restrict_to(flat, crown_bits), restrict_to(flat, trunk_bits)}, Rational(1));
    }
    return t;
}

ForestTensor forest_delta(const ForestLC& a) {
    ForestTensor t;
    for (const auto& [f, c] : a) t += forest_delta(f).scaled(c);
    return t;
}

std::vector<std::pair<Forest, Forest>> covering_subforests(const Forest& f) {
    std::vector<std::pair<Forest, Forest>> out;
    FlatForest flat = flatten(f);
    int n = flat.size();
    std::vector<int> edge_child;  // edge e = (edge_child[e] -> its parent)
    for (int v = 0; v < n; ++v)
        if (flat.parent[v] >= 0) edge_child.push_back(v);
    int m = static_cast<int>(edge_child.size());
    guard_enumeration(m, "covering_subforests");

    for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << m); ++kept) {
        // Blocks: connected components through kept edges.
        std::vector<int> blk(n);
        for (int v = 0; v < n; ++v) blk[v] = v;
        for (int e = 0; e < m; ++e)
            if (kept & (std::uint64_t{1} << e)) {
                int v = edge_child[e];
                // parents precede children, so the parent's block is final
                blk[v] = blk[flat.parent[v]];
            }
        // Normalize block ids to 0..r-1 in order of first appearance.
        std::vector<int> id(n, -1);
        int r = 0;
        for (int v = 0; v < n; ++v)
            if (id[blk[v]] < 0) id[blk[v]] = r++;
        // G: the blocks with their kept edges.
        std::vector<std::vector<bool>> block_bits(r, std::vector<bool>(n, false));
        for (int v = 0; v < n; ++v) block_bits[id[blk[v]]][v] = true;
        std::vector<Tree> g_trees;
        for (int b = 0; b < r; ++b) {
            Forest piece = restrict_to(flat, block_bits[b]);
            g_trees.insert(g_trees.end(), piece.trees.begin(), piece.trees.end());
        }
        Forest g = Forest::make(std::move(g_trees));

        // F/G: one vertex per block, decorated by the block sum; edges are the
        // non-kept edges pushed down to blocks.
        FlatForest contracted;
        contracted.dec.assign(r, Letter{0});
        contracted.parent.assign(r, -1);
        std::vector<bool> seen(r, false);
        for (int v = 0; v < n; ++v) {
            int b = id[blk[v]];
            contracted.dec[b] = seen[b] ? combine(contracted.dec[b], flat.dec[v]) : flat.dec[v];
            seen[b] = true;
        }
        for (int e = 0; e < m; ++e) {
            if (kept & (1u << e)) continue;
            int v = edge_child[e];
            contracted.parent[id[blk[v]]] = id[blk[flat.parent[v]]];
        }
        out.emplace_back(std::move(g), unflatten(contracted));
    }
    return out;
}

ForestTensor forest_gamma(const Forest& f) {
    ForestTensor t;
    for (const auto& [g, contracted] : covering_subforests(f))
        t.add_term({contracted, g}, Rational(1));
    return t;
}

ForestTensor forest_gamma(const ForestLC& a) {
    ForestTensor t;
    for (const auto& [f, c] : a) t += forest_gamma(f).scaled(c);
    return t;
}

Rational forest_counit(const Forest& f) { return f.is_empty() ? Rational(1) : Rational(0); }

namespace {

ForestLC tree_antipode(const Tree& t) {
    static std::map<Tree, ForestLC> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(t);
        if (it != cache.end()) return it->second;
    }
    ForestLC r;
    Forest whole = Forest::single(t);
    r.add_term(whole, Rational(-1));
    for (const auto& [pair, c] : forest_delta(whole)) {
        const Forest& crown = pair.first;
        const Forest& trunk = pair.second;
        if (crown.is_empty() || trunk.is_empty()) continue;
        r -= forest_mul(forest_antipode(crown), ForestLC::basis(trunk)).scaled(c);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(t, std::move(r)).first->second;
}

}  // namespace

ForestLC forest_antipode(const Forest& f) {
    // multiplicative over the trees of the forest
    ForestLC r = ForestLC::basis(Forest::empty());
    for (const Tree& t : f.trees) r = forest_mul(r, tree_antipode(t));
    return r;
}

ForestLC forest_antipode(const ForestLC& a) {
    ForestLC r;
    for (const auto& [f, c] : a) r += forest_antipode(f).scaled(c);
    return r;
}

namespace {

void arborify_rec(const FlatForest& flat, const std::vector<std::vector<int>>& kids,
                  unsigned placed, const Word& prefix, bool contractions, WordLC& out) {
    int n = flat.size();
    if (placed == (1u << n) - 1u) {
        out.add_term(prefix, Rational(1));
        return;
    }
    // available = unplaced vertices all of whose children are placed; any two
    // are incomparable, so any nonempty subset can form the next letter
    std::vector<int> avail;
    for (int v = 0; v < n; ++v) {
        if (placed & (1u << v)) continue;
        bool ready = true;
        for (int c : kids[v])
            if (!(placed & (1u << c))) {
                ready = false;
                break;
            }
        if (ready) avail.push_back(v);
    }
    int k = static_cast<int>(avail.size());
    for (unsigned pick = 1; pick < (1u << k); ++pick) {
        if (!contractions && __builtin_popcount(pick) != 1) continue;
        Letter sum{0};
        unsigned mask = 0;
        bool first = true;
        for (int i = 0; i < k; ++i)
            if (pick & (1u << i)) {
                sum = first ? flat.dec[avail[i]] : combine(sum, flat.dec[avail[i]]);
                first = false;
                mask |= 1u << avail[i];
            }
        Word next = prefix;
        next.letters.push_back(sum);
        arborify_rec(flat, kids, placed | mask, next, contractions, out);
    }
}

WordLC arborify_impl(const Forest& f, bool contractions) {
    FlatForest flat = flatten(f);
    int n = flat.size();
    guard_enumeration(n, "arborify");
    std::vector<std::vector<int>> kids(n);
    for (int v = 0; v < n; ++v)
        if (flat.parent[v] >= 0) kids[flat.parent[v]].push_back(v);
    WordLC out;
    arborify_rec(flat, kids, 0, Word(), contractions, out);
    return out;
}

}  // namespace

WordLC arborify(const Forest& f) {
    static std::map<Forest, WordLC> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(f);
        if (it != cache.end()) return it->second;
    }
    WordLC r = arborify_impl(f, /*contractions=*/true);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(f, std::move(r)).first->second;
}

WordLC arborify(const ForestLC& a) {
    WordLC r;
    for (const auto& [f, c] : a) r += arborify(f).scaled(c);
    return r;
}

WordLC arborify_simple(const Forest& f) { return arborify_impl(f, /*contractions=*/false); }

TreeLC graft(const Tree& s, const Tree& t) {
    TreeLC r;
    // attach at the root
    {
        std::vector<Tree> ch = t.children;
        ch.push_back(s);
        r.add_term(Tree::make(t.dec, std::move(ch)), Rational(1));
    }
    // attach inside the i-th child subtree
    for (std::size_t i = 0; i < t.children.size(); ++i)
        for (const auto& [sub, c] : graft(s, t.children[i])) {
            std::vector<Tree> ch = t.children;
            ch[i] = sub;
            r.add_term(Tree::make(t.dec, std::move(ch)), c);
        }
    return r;
}

TreeLC graft(const TreeLC& a, const TreeLC& b) {
    TreeLC r;
    for (const auto& [s, cs] : a)
        for (const auto& [t, ct] : b)
            r += graft(s, t).scaled(cs * ct);
    return r;
}

ForestLC gl_product(const Forest& f, const Forest& g) {
    FlatForest gf = flatten(g);
    int ng = gf.size();
    int k = static_cast<int>(f.trees.size());

    ForestLC out;
    // target per tree of f: 0 = stay at root level, v = attach below vertex v-1 of g
    std::vector<int> target(k, 0);
    while (true) {
        FlatForest combined = gf;
        for (int i = 0; i < k; ++i) {
            int base = combined.size();
            flatten_tree(f.trees[i], -1, combined);
            combined.parent[base] = target[i] - 1;  // -1 when staying at root level
        }
        out.add_term(unflatten(combined), Rational(1));

        int i = k - 1;
        while (i >= 0 && target[i] == ng) target[i--] = 0;
        if (i < 0) break;
        ++target[i];
    }
    return out;
}

ForestLC gl_product(const ForestLC& a, const ForestLC& b) {
    ForestLC r;
    for (const auto& [f, cf] : a)
        for (const auto& [g, cg] : b)
            r += gl_product(f, g).scaled(cf * cg);
    return r;
}

std::vector<Tree> trees_with_vertices(int n, const std::vector<Letter>& decorations) {
    std::vector<Tree> out;
    if (n <= 0) return out;
    for (Letter d : decorations)
        for (const Forest& ch : forests_with_vertices(n - 1, decorations))
            out.push_back(Tree::make(d, ch.trees));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Multisets of trees totalling `remaining` vertices; trees picked in
// nondecreasing canonical order starting at index `from` of `pool`.
void forests_rec(const std::vector<Tree>& pool, const std::vector<int>& sizes, int from,
                 int remaining, std::vector<Tree>& acc, std::vector<Forest>& out) {
    if (remaining == 0) {
        out.push_back(Forest::make(acc));
        return;
    }
    for (int i = from; i < static_cast<int>(pool.size()); ++i) {
        if (sizes[i] > remaining) continue;
        acc.push_back(pool[i]);
        forests_rec(pool, sizes, i, remaining - sizes[i], acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Forest> forests_with_vertices(int n, const std::vector<Letter>& decorations) {
    std::vector<Forest> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back(Forest::empty());
        return out;
    }
    std::vector<Tree> pool;
    for (int k = 1; k <= n; ++k)
        for (Tree& t : trees_with_vertices(k, decorations)) pool.push_back(std::move(t));
    std::vector<int> sizes;
    for (const Tree& t : pool) sizes.push_back(static_cast<int>(t.vertex_count()));
    std::vector<Tree> acc;
    forests_rec(pool, sizes, 0, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Forest> forests_up_to_vertices(int max_vertices,
                                           const std::vector<Letter>& decorations) {
    std::vector<Forest> out;
    for (int n = 0; n <= max_vertices; ++n)
        for (Forest& f : forests_with_vertices(n, decorations)) out.push_back(std::move(f));
    return out;
}

}  // namespace mouldcalc

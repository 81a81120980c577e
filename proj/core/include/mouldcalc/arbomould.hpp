#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mouldcalc/forest.hpp"
#include "mouldcalc/mould.hpp"

namespace mouldcalc {

// A rational-valued rule on decorated rooted forests; memoized, pure, shared.
class ArboMould {
public:
    ArboMould();  // the zero mould

    static ArboMould from_rule(std::string name, std::function<Rational(const Forest&)> rule);
    static ArboMould from_table(std::string name, std::map<Forest, Rational> table,
                                Rational dflt = Rational(0));

    Rational eval(const Forest& f) const;
    Rational operator()(const Forest& f) const { return eval(f); }
    Rational eval(const ForestLC& a) const;

    const std::string& name() const;

    bool is_table() const;
    const std::map<Forest, Rational>& table() const;
    const Rational& table_default() const;

private:
    struct State;
    explicit ArboMould(std::shared_ptr<State> s) : state_(std::move(s)) {}
    std::shared_ptr<State> state_;
};

// eps: 1 on the empty forest only. I: 1 on one-vertex forests only — the
// right unit for forest composition. Note this is not the arborification of
// the word mould I, which also takes the value 1 on some larger forests;
// `arborify_mould(builtin_mould("I"))` gives that one.
ArboMould arbo_builtin(const std::string& name);  // "eps" | "I"

// M_< = M after contracting arborification.
ArboMould arborify_mould(const Mould& M);

// Dual of the admissible-cut coproduct: sum over cuts of
// M^{crown} N^{trunk}.
ArboMould arbo_mul(const ArboMould& M, const ArboMould& N);

// Sum over covering subforests of M^{F/G} times N on each connected block;
// M^{empty} on the empty forest (the empty product of blocks).
ArboMould arbo_comp(const ArboMould& M, const ArboMould& N);

// Dual of the internal coproduct: sum over covering subforests of
// M^{F/G} N^{G}; M^{empty} on the empty forest.
ArboMould arbo_diamond(const ArboMould& M, const ArboMould& N);

// N^{empty} = 1 and N multiplicative for the disjoint union, over all pairs
// of nonempty forests within the vertex bound.
MouldCheck is_separative(const ArboMould& N, int max_vertices,
                         const std::vector<Letter>& decorations);

// Seeded table over all forests within the bound, default 0 outside, 1 on
// the empty forest.
ArboMould random_table_arbomould(std::uint64_t seed, int max_vertices,
                                 const std::vector<Letter>& decorations);

// Formal sum of forests with coefficients M^F / |Aut F|, truncated by the
// number of vertices (additive under the Grossman-Larson product).
struct TruncatedSSeries {
    int vertex_bound = 0;
    ForestLC terms;

    friend bool operator==(const TruncatedSSeries& a, const TruncatedSSeries& b) {
        return a.vertex_bound == b.vertex_bound && a.terms == b.terms;
    }
};

TruncatedSSeries s_series(const ArboMould& M, int vertex_bound,
                          const std::vector<Letter>& decorations);
TruncatedSSeries gl_series_mul(const TruncatedSSeries& a, const TruncatedSSeries& b);

std::string arbomould_table_to_json(const ArboMould& M);
ArboMould arbomould_table_from_json(const std::string& json_text, std::string name);
std::string arbomould_values_json(const ArboMould& M, const std::vector<Forest>& forests);

}  // namespace mouldcalc

#include "mouldcalc/arbomould.hpp"

#include <mutex>
#include <stdexcept>

#include <json.hpp>

namespace mouldcalc {

struct ArboMould::State {
    std::string name;
    std::function<Rational(const Forest&)> rule;
    bool table_backed = false;
    std::map<Forest, Rational> table;
    Rational dflt = Rational(0);
    mutable std::map<Forest, Rational> memo;
    mutable std::mutex mtx;
};

ArboMould::ArboMould() {
    auto s = std::make_shared<State>();
    s->name = "0";
    s->rule = [](const Forest&) { return Rational(0); };
    state_ = std::move(s);
}

ArboMould ArboMould::from_rule(std::string name, std::function<Rational(const Forest&)> rule) {
    auto s = std::make_shared<State>();
    s->name = std::move(name);
    s->rule = std::move(rule);
    return ArboMould(std::move(s));
}

ArboMould ArboMould::from_table(std::string name, std::map<Forest, Rational> table,
                                Rational dflt) {
    auto s = std::make_shared<State>();
    s->name = std::move(name);
    s->table_backed = true;
    s->table = std::move(table);
    s->dflt = std::move(dflt);
    return ArboMould(std::move(s));
}

Rational ArboMould::eval(const Forest& f) const {
    if (state_->table_backed) {
        auto it = state_->table.find(f);
        return it == state_->table.end() ? state_->dflt : it->second;
    }
    {
        std::lock_guard<std::mutex> lock(state_->mtx);
        auto it = state_->memo.find(f);
        if (it != state_->memo.end()) return it->second;
    }
    Rational v = state_->rule(f);
    std::lock_guard<std::mutex> lock(state_->mtx);
    return state_->memo.emplace(f, std::move(v)).first->second;
}

Rational ArboMould::eval(const ForestLC& a) const {
    Rational r(0);
    for (const auto& [f, c] : a) r += c * eval(f);
    return r;
}

const std::string& ArboMould::name() const { return state_->name; }

bool ArboMould::is_table() const { return state_->table_backed; }

const std::map<Forest, Rational>& ArboMould::table() const {
    if (!state_->table_backed) throw std::logic_error("ArboMould: not table-backed");
    return state_->table;
}

const Rational& ArboMould::table_default() const {
    if (!state_->table_backed) throw std::logic_error("ArboMould: not table-backed");
    return state_->dflt;
}

ArboMould arbo_builtin(const std::string& name) {
    if (name == "eps")
        return ArboMould::from_rule("eps", [](const Forest& f) {
            return f.is_empty() ? Rational(1) : Rational(0);
        });
    if (name == "I")
        return ArboMould::from_rule("I", [](const Forest& f) {
            return f.vertex_count() == 1 ? Rational(1) : Rational(0);
        });
    throw std::invalid_argument("unknown builtin arborescent mould '" + name + "'");
}

ArboMould arborify_mould(const Mould& M) {
    return ArboMould::from_rule(M.name() + "_<", [M](const Forest& f) {
        return M.eval(arborify(f));
    });
}

ArboMould arbo_mul(const ArboMould& M, const ArboMould& N) {
    return ArboMould::from_rule("(" + M.name() + "*" + N.name() + ")", [M, N](const Forest& f) {
        Rational r(0);
        for (const auto& [pair, c] : forest_delta(f))
            r += c * M.eval(pair.first) * N.eval(pair.second);
        return r;
    });
}

ArboMould arbo_comp(const ArboMould& M, const ArboMould& N) {
    return ArboMould::from_rule("(" + M.name() + " o " + N.name() + ")",
                                [M, N](const Forest& f) {
                                    Rational r(0);
                                    for (const auto& [g, contracted] : covering_subforests(f)) {
                                        Rational term = M.eval(contracted);
                                        for (const Tree& t : g.trees) {
                                            if (term.is_zero()) break;
                                            term *= N.eval(Forest::single(t));
                                        }
                                        r += term;
                                    }
                                    return r;
                                });
}

ArboMould arbo_diamond(const ArboMould& M, const ArboMould& N) {
    return ArboMould::from_rule("(" + M.name() + " <> " + N.name() + ")",
                                [M, N](const Forest& f) {
                                    if (f.is_empty()) return M.eval(f);
                                    Rational r(0);
                                    for (const auto& [g, contracted] : covering_subforests(f))
                                        r += M.eval(contracted) * N.eval(g);
                                    return r;
                                });
}

MouldCheck is_separative(const ArboMould& N, int max_vertices,
                         const std::vector<Letter>& decorations) {
    MouldCheck res;
    Rational unit = N.eval(Forest::empty());
    if (!unit.is_one()) {
        res.ok = false;
        res.detail = "value on the empty forest is " + unit.text() + ", expected 1";
        return res;
    }
    std::vector<Forest> forests = forests_up_to_vertices(max_vertices, decorations);
    for (const Forest& f : forests) {
        if (f.is_empty()) continue;
        for (const Forest& g : forests) {
            if (g.is_empty() || g < f) continue;
            if (f.vertex_count() + g.vertex_count() > static_cast<std::size_t>(max_vertices))
                continue;
            Rational lhs = N.eval(forest_mul(f, g));
            Rational rhs = N.eval(f) * N.eval(g);
            if (lhs != rhs) {
                res.ok = false;
                res.detail = "F=" + f.text() + " G=" + g.text() + ": " + lhs.text() +
                             " != " + rhs.text();
                return res;
            }
        }
    }
    return res;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

ArboMould random_table_arbomould(std::uint64_t seed, int max_vertices,
                                 const std::vector<Letter>& decorations) {
    std::uint64_t stream = seed * 0x9e3779b97f4a7c15ULL + 0xa54ff53a5f1d36f1ULL;
    std::map<Forest, Rational> table;
    for (const Forest& f : forests_up_to_vertices(max_vertices, decorations)) {
        if (f.is_empty()) {
            table[f] = Rational(1);
            continue;
        }
        long long num = static_cast<long long>(splitmix64(stream) % 19) - 9;
        long long den = static_cast<long long>(splitmix64(stream) % 7) + 1;
        table[f] = Rational(num, den);
    }
    return ArboMould::from_table("arborand(seed=" + std::to_string(seed) + ")",
                                 std::move(table));
}

TruncatedSSeries s_series(const ArboMould& M, int vertex_bound,
                          const std::vector<Letter>& decorations) {
    TruncatedSSeries s;
    s.vertex_bound = vertex_bound;
    for (const Forest& f : forests_up_to_vertices(vertex_bound, decorations))
        s.terms.add_term(f, M.eval(f) / Rational(aut(f)));
    return s;
}

TruncatedSSeries gl_series_mul(const TruncatedSSeries& a, const TruncatedSSeries& b) {
    TruncatedSSeries s;
    s.vertex_bound = std::min(a.vertex_bound, b.vertex_bound);
    for (const auto& [f, cf] : a.terms)
        for (const auto& [g, cg] : b.terms) {
            if (f.vertex_count() + g.vertex_count() > static_cast<std::size_t>(s.vertex_bound))
                continue;
            s.terms += gl_product(f, g).scaled(cf * cg);
        }
    return s;
}

std::string arbomould_table_to_json(const ArboMould& M) {
    nlohmann::ordered_json j;
    j["default"] = M.table_default().text();
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [f, v] : M.table()) entries[f.text()] = v.text();
    j["entries"] = std::move(entries);
    return j.dump();
}

ArboMould arbomould_table_from_json(const std::string& json_text, std::string name) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Rational dflt = j.contains("default") ? Rational::parse(j["default"].get<std::string>())
                                          : Rational(0);
    std::map<Forest, Rational> table;
    if (j.contains("entries"))
        for (auto& [key, value] : j["entries"].items())
            table[Forest::parse(key)] = Rational::parse(value.get<std::string>());
    return ArboMould::from_table(std::move(name), std::move(table), std::move(dflt));
}

std::string arbomould_values_json(const ArboMould& M, const std::vector<Forest>& forests) {
    nlohmann::ordered_json j;
    j["default"] = "0";
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    std::map<Forest, Rational> sorted;
    for (const Forest& f : forests) sorted[f] = M.eval(f);
    for (const auto& [f, v] : sorted) entries[f.text()] = v.text();
    j["entries"] = std::move(entries);
    return j.dump();
}

}  // namespace mouldcalc

#include "mouldcalc/mould.hpp"

#include <mutex>
#include <stdexcept>

#include <json.hpp>

namespace mouldcalc {

struct Mould::State {
    std::string name;
    std::function<Rational(const Word&)> rule;
    bool table_backed = false;
    std::map<Word, Rational> table;
    Rational dflt = Rational(0);
    mutable std::map<Word, Rational> memo;
    mutable std::mutex mtx;
};

Mould::Mould() {
    auto s = std::make_shared<State>();
    s->name = "0";
    s->rule = [](const Word&) { return Rational(0); };
    state_ = std::move(s);
}

Mould Mould::from_rule(std::string name, std::function<Rational(const Word&)> rule) {
    auto s = std::make_shared<State>();
    s->name = std::move(name);
    s->rule = std::move(rule);
    return Mould(std::move(s));
}

Mould Mould::from_table(std::string name, std::map<Word, Rational> table, Rational dflt) {
    auto s = std::make_shared<State>();
    s->name = std::move(name);
    s->table_backed = true;
    s->table = std::move(table);
    s->dflt = std::move(dflt);
    return Mould(std::move(s));
}

Rational Mould::eval(const Word& w) const {
    if (state_->table_backed) {
        auto it = state_->table.find(w);
        return it == state_->table.end() ? state_->dflt : it->second;
    }
    {
        std::lock_guard<std::mutex> lock(state_->mtx);
        auto it = state_->memo.find(w);
        if (it != state_->memo.end()) return it->second;
    }
    Rational v = state_->rule(w);
    std::lock_guard<std::mutex> lock(state_->mtx);
    return state_->memo.emplace(w, std::move(v)).first->second;
}

Rational Mould::eval(const WordLC& a) const {
    Rational r(0);
    for (const auto& [w, c] : a) r += c * eval(w);
    return r;
}

const std::string& Mould::name() const { return state_->name; }

bool Mould::is_table() const { return state_->table_backed; }

const std::map<Word, Rational>& Mould::table() const {
    if (!state_->table_backed) throw std::logic_error("Mould: not table-backed");
    return state_->table;
}

const Rational& Mould::table_default() const {
    if (!state_->table_backed) throw std::logic_error("Mould: not table-backed");
    return state_->dflt;
}

Mould builtin_mould(const std::string& name) {
    if (name == "eps")
        return Mould::from_rule("eps", [](const Word& w) {
            return w.empty() ? Rational(1) : Rational(0);
        });
    if (name == "I")
        return Mould::from_rule("I", [](const Word& w) {
            return w.length() == 1 ? Rational(1) : Rational(0);
        });
    if (name == "exp")
        return Mould::from_rule("exp", [](const Word& w) {
            return Rational(1) / Rational::factorial(w.length());
        });
    if (name == "J")
        return Mould::from_rule("J", [](const Word& w) {
            return w.length() % 2 == 0 ? Rational(1) : Rational(-1);
        });
    if (name == "one")
        return Mould::from_rule("one", [](const Word&) { return Rational(1); });
    throw std::invalid_argument("unknown builtin mould '" + name + "'");
}

Mould mould_mul(const Mould& M, const Mould& N) {
    return Mould::from_rule("(" + M.name() + "*" + N.name() + ")", [M, N](const Word& w) {
        Rational r(0);
        for (std::size_t j = 0; j <= w.length(); ++j)
            r += M.eval(w.subword(0, j)) * N.eval(w.subword(j, w.length()));
        return r;
    });
}

namespace {

// Calls f(blocks) for each split of w into consecutive nonempty blocks.
template <class F>
void for_each_block_split(const Word& w, F&& f) {
    std::size_t n = w.length();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<Word> blocks;
        std::size_t start = 0;
        for (std::size_t gap = 0; gap + 1 < n; ++gap)
            if (mask & (std::size_t{1} << gap)) {
                blocks.push_back(w.subword(start, gap + 1));
                start = gap + 1;
            }
        blocks.push_back(w.subword(start, n));
        f(blocks);
    }
}

}  // namespace

Mould mould_comp(const Mould& M, const Mould& N) {
    return Mould::from_rule("(" + M.name() + " o " + N.name() + ")", [M, N](const Word& w) {
        if (w.empty()) return M.eval(w);
        Rational r(0);
        for_each_block_split(w, [&](const std::vector<Word>& blocks) {
            Word weights;
            Rational term(1);
            for (const Word& b : blocks) {
                weights.letters.push_back(b.weight());
                term *= N.eval(b);
            }
            if (!term.is_zero()) r += M.eval(weights) * term;
        });
        return r;
    });
}

Mould mould_diamond(const Mould& M, const Mould& N) {
    return Mould::from_rule("(" + M.name() + " <> " + N.name() + ")", [M, N](const Word& w) {
        if (w.empty()) return M.eval(w);
        Rational r(0);
        for_each_block_split(w, [&](const std::vector<Word>& blocks) {
            Word weights;
            for (const Word& b : blocks) weights.letters.push_back(b.weight());
            Rational m = M.eval(weights);
            if (!m.is_zero()) r += m * N.eval(qsh_many(blocks));
        });
        return r;
    });
}

namespace {

MouldCheck character_check(const Mould& M, const std::vector<Word>& words, bool quasi) {
    MouldCheck res;
    Rational unit = M.eval(Word());
    if (!unit.is_one()) {
        res.ok = false;
        res.detail = "value on the empty word is " + unit.text() + ", expected 1";
        return res;
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const Word& u = words[i];
            const Word& v = words[j];
            Rational lhs = M.eval(quasi ? qsh(u, v) : shuffle(u, v));
            Rational rhs = M.eval(u) * M.eval(v);
            if (lhs != rhs) {
                res.ok = false;
                res.detail = "u=" + u.text() + " v=" + v.text() + ": " + lhs.text() +
                             " != " + rhs.text();
                return res;
            }
        }
    return res;
}

}  // namespace

MouldCheck is_symmetrel(const Mould& M, int max_len, const std::vector<Letter>& letters) {
    return character_check(M, words_up_to_length(max_len, letters, /*include_empty=*/false),
                           /*quasi=*/true);
}

MouldCheck is_symmetral(const Mould& M, int max_len, const std::vector<Letter>& letters) {
    return character_check(M, words_up_to_length(max_len, letters, /*include_empty=*/false),
                           /*quasi=*/false);
}

MouldCheck is_symmetrel_by_weight(const Mould& M, long long max_weight) {
    MouldCheck res;
    Rational unit = M.eval(Word());
    if (!unit.is_one()) {
        res.ok = false;
        res.detail = "value on the empty word is " + unit.text() + ", expected 1";
        return res;
    }
    std::vector<Word> words = words_up_to_weight(max_weight, /*include_empty=*/false);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (v < u || u.weight().value + v.weight().value > max_weight) continue;
            Rational lhs = M.eval(qsh(u, v));
            Rational rhs = M.eval(u) * M.eval(v);
            if (lhs != rhs) {
                res.ok = false;
                res.detail = "u=" + u.text() + " v=" + v.text() + ": " + lhs.text() +
                             " != " + rhs.text();
                return res;
            }
        }
    return res;
}

Mould convolution_exponential(std::string name, std::map<Word, Rational> alpha) {
    alpha.erase(Word());  // the form must kill the empty word
    auto shared = std::make_shared<const std::map<Word, Rational>>(std::move(alpha));
    return Mould::from_rule(std::move(name), [shared](const Word& w) {
        if (w.empty()) return Rational(1);
        auto value = [&](const Word& b) {
            auto it = shared->find(b);
            return it == shared->end() ? Rational(0) : it->second;
        };
        Rational r(0);
        for_each_block_split(w, [&](const std::vector<Word>& blocks) {
            Rational term(1);
            for (const Word& b : blocks) {
                term *= value(b);
                if (term.is_zero()) return;
            }
            r += term / Rational::factorial(blocks.size());
        });
        return r;
    });
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Small nonzero-biased rational from a seed stream.
Rational seeded_rational(std::uint64_t& stream) {
    long long num = static_cast<long long>(splitmix64(stream) % 19) - 9;
    long long den = static_cast<long long>(splitmix64(stream) % 7) + 1;
    return Rational(num, den);
}

std::uint64_t word_fingerprint(const Word& w, std::uint64_t seed) {
    std::uint64_t h = seed ^ 0x243f6a8885a308d3ULL;
    for (Letter a : w.letters) {
        h ^= static_cast<std::uint64_t>(a.value) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        std::uint64_t s = h;
        h = splitmix64(s);
    }
    return h;
}

}  // namespace

Mould gen_symmetrel(std::uint64_t seed, long long max_weight) {
    if (max_weight < 1) throw std::invalid_argument("gen_symmetrel: max_weight must be >= 1");

    // Span of all quasi-shuffle products of nonempty words inside the weight
    // truncation, in reduced form.
    RowReducer<Word> red;
    std::vector<Word> words = words_up_to_weight(max_weight, /*include_empty=*/false);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (v < u || u.weight().value + v.weight().value > max_weight) continue;
            red.insert(qsh(u, v));
        }

    // Pseudo-random values on the free coordinates, pivot coordinates solved
    // so the form annihilates every reduced row.
    std::uint64_t stream = seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL;
    std::map<Word, Rational> alpha;
    for (const Word& w : words)
        if (!red.rows().count(w)) alpha[w] = seeded_rational(stream);
    for (const auto& [pivot, row] : red.rows()) {
        Rational v(0);
        for (const auto& [b, c] : row) {
            if (b == pivot) continue;
            auto it = alpha.find(b);
            if (it != alpha.end()) v += c * it->second;
        }
        if (!v.is_zero()) alpha[pivot] = -v;
    }

    Mould N = convolution_exponential(
        "gen-symmetrel(seed=" + std::to_string(seed) + ",W=" + std::to_string(max_weight) + ")",
        std::move(alpha));
    MouldCheck check = is_symmetrel_by_weight(N, max_weight);
    if (!check.ok)
        throw std::runtime_error("gen_symmetrel: self-check failed: " + check.detail);
    return N;
}

Mould random_table_mould(std::uint64_t seed, int max_len, const std::vector<Letter>& letters) {
    std::uint64_t stream = seed * 0x9e3779b97f4a7c15ULL + 0x3c6ef372fe94f82bULL;
    std::map<Word, Rational> table;
    table[Word()] = Rational(1);
    for (const Word& w : words_up_to_length(max_len, letters, /*include_empty=*/false))
        table[w] = seeded_rational(stream);
    return Mould::from_table("rand(seed=" + std::to_string(seed) + ")", std::move(table));
}

Mould random_rule_mould(std::uint64_t seed) {
    return Mould::from_rule("randrule(seed=" + std::to_string(seed) + ")",
                            [seed](const Word& w) {
                                if (w.empty()) return Rational(1);
                                std::uint64_t h = word_fingerprint(w, seed);
                                long long num = static_cast<long long>(h % 19) - 9;
                                long long den = static_cast<long long>((h >> 32) % 7) + 1;
                                return Rational(num, den);
                            });
}

Mould random_geometric_mould(std::uint64_t seed, const Rational& C, const Rational& kappa,
                             long long max_weight) {
    std::uint64_t stream = seed * 0x9e3779b97f4a7c15ULL + 0xbb67ae8584caa73bULL;
    std::map<Word, Rational> table;
    for (const Word& w : words_up_to_weight(max_weight, /*include_empty=*/true)) {
        long long num = static_cast<long long>(splitmix64(stream) % 21) - 10;
        Rational scale(num, 10);
        table[w] = scale * C * kappa.pow(static_cast<unsigned long>(w.weight().value));
    }
    return Mould::from_table("randgeo(seed=" + std::to_string(seed) + ")", std::move(table));
}

TruncatedWordSeries word_series(const Mould& M, long long weight_bound) {
    TruncatedWordSeries s;
    s.weight_bound = weight_bound;
    for (const Word& w : words_up_to_weight(weight_bound, /*include_empty=*/true))
        s.terms.add_term(w, M.eval(w));
    return s;
}

TruncatedWordSeries series_from(const WordLC& a, long long weight_bound) {
    TruncatedWordSeries s;
    s.weight_bound = weight_bound;
    for (const auto& [w, c] : a)
        if (w.weight().value <= weight_bound) s.terms.add_term(w, c);
    return s;
}

TruncatedWordSeries series_mul(const TruncatedWordSeries& a, const TruncatedWordSeries& b) {
    TruncatedWordSeries s;
    s.weight_bound = std::min(a.weight_bound, b.weight_bound);
    for (const auto& [u, cu] : a.terms)
        for (const auto& [v, cv] : b.terms) {
            if (u.weight().value + v.weight().value > s.weight_bound) continue;
            s.terms.add_term(concat(u, v), cu * cv);
        }
    return s;
}

WordLC iota(const Mould& M, Letter kappa) {
    WordLC r;
    for (const Word& w : words_of_weight(kappa.value)) r.add_term(w, M.eval(w));
    return r;
}

TruncatedWordSeries substitute(const Mould& M, const TruncatedWordSeries& s) {
    TruncatedWordSeries out;
    out.weight_bound = s.weight_bound;
    std::map<Letter, WordLC> images;
    for (const auto& [w, c] : s.terms) {
        // The substitution is weight homogeneous, so truncation commutes.
        WordLC image = WordLC::basis(Word());
        for (Letter a : w.letters) {
            auto it = images.find(a);
            if (it == images.end()) it = images.emplace(a, iota(M, a)).first;
            WordLC next;
            for (const auto& [u, cu] : image)
                for (const auto& [v, cv] : it->second)
                    next.add_term(concat(u, v), cu * cv);
            image = std::move(next);
        }
        out.terms += image.scaled(c);
    }
    return out;
}

namespace {

MouldCheck bound_check(const Mould& M, long long max_weight, bool include_empty,
                       const std::function<Rational(const Word&)>& bound) {
    MouldCheck res;
    for (const Word& w : words_up_to_weight(max_weight, include_empty)) {
        Rational v = M.eval(w).abs();
        Rational b = bound(w);
        if (v > b) {
            res.ok = false;
            res.detail = "w=" + w.text() + ": |value|=" + v.text() + " exceeds " + b.text();
            return res;
        }
    }
    return res;
}

}  // namespace

MouldCheck growth_audit(const Mould& M, const Rational& C, const Rational& kappa,
                        long long max_weight) {
    return bound_check(M, max_weight, /*include_empty=*/true, [&](const Word& w) {
        return C * kappa.pow(static_cast<unsigned long>(w.weight().value));
    });
}

MouldCheck growth_product_bound(const Mould& M, const Mould& N, const Rational& C,
                                const Rational& Cp, const Rational& kappa, const Rational& kappap,
                                long long max_weight) {
    Mould prod = mould_mul(M, N);
    Rational kmax = kappa > kappap ? kappa : kappap;
    return bound_check(prod, max_weight, /*include_empty=*/true, [=](const Word& w) {
        return C * Cp * Rational(static_cast<long long>(w.length()) + 1) *
               kmax.pow(static_cast<unsigned long>(w.weight().value));
    });
}

MouldCheck growth_comp_bound(const Mould& M, const Mould& N, const Rational& C,
                             const Rational& Cp, const Rational& kappa, const Rational& kappap,
                             long long max_weight) {
    Mould comp = mould_comp(M, N);
    return bound_check(comp, max_weight, /*include_empty=*/false, [=](const Word& w) {
        return C * (Rational(1) + Cp).pow(static_cast<unsigned long>(w.length() - 1)) *
               (kappa * kappap).pow(static_cast<unsigned long>(w.weight().value));
    });
}

std::string mould_table_to_json(const Mould& M) {
    nlohmann::ordered_json j;
    j["default"] = M.table_default().text();
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [w, v] : M.table()) entries[w.text()] = v.text();
    j["entries"] = std::move(entries);
    return j.dump();
}

Mould mould_table_from_json(const std::string& json_text, std::string name) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Rational dflt = j.contains("default") ? Rational::parse(j["default"].get<std::string>())
                                          : Rational(0);
    std::map<Word, Rational> table;
    if (j.contains("entries"))
        for (auto& [key, value] : j["entries"].items())
            table[Word::parse(key)] = Rational::parse(value.get<std::string>());
    return Mould::from_table(std::move(name), std::move(table), std::move(dflt));
}

std::string mould_values_json(const Mould& M, const std::vector<Word>& words) {
    nlohmann::ordered_json j;
    j["default"] = "0";
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    std::map<Word, Rational> sorted;
    for (const Word& w : words) sorted[w] = M.eval(w);
    for (const auto& [w, v] : sorted) entries[w.text()] = v.text();
    j["entries"] = std::move(entries);
    return j.dump();
}

}  // namespace mouldcalc

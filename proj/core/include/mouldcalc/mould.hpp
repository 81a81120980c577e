#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mouldcalc/lincomb.hpp"
#include "mouldcalc/quasishuffle.hpp"
#include "mouldcalc/word.hpp"

namespace mouldcalc {

// A mould: a rational-valued rule on words. Evaluation is pure and memoized;
// copies share state, and composed moulds capture their operands immutably.
class Mould {
public:
    Mould();  // the zero mould

    static Mould from_rule(std::string name, std::function<Rational(const Word&)> rule);
    static Mould from_table(std::string name, std::map<Word, Rational> table,
                            Rational dflt = Rational(0));

    Rational eval(const Word& w) const;
    Rational operator()(const Word& w) const { return eval(w); }
    // Linear extension over a combination of words.
    Rational eval(const WordLC& a) const;

    const std::string& name() const;

    bool is_table() const;
    const std::map<Word, Rational>& table() const;  // throws unless table-backed
    const Rational& table_default() const;

private:
    struct State;
    explicit Mould(std::shared_ptr<State> s) : state_(std::move(s)) {}
    std::shared_ptr<State> state_;
};

// eps, I, exp, J, one. Throws on an unknown name.
Mould builtin_mould(const std::string& name);

// Deconcatenation convolution: (M x N)^w = sum over splits w = w'.w'' of
// M^{w'} N^{w''}.
Mould mould_mul(const Mould& M, const Mould& N);

// (M o N)^w = sum over splits of w into nonempty blocks of M^{weights word}
// times the product of N over the blocks; M^{[]} on the empty word.
Mould mould_comp(const Mould& M, const Mould& N);

// Same block sum with N extended linearly over the quasi-shuffle of the
// blocks; dual to the internal coproduct. M^{[]} on the empty word.
Mould mould_diamond(const Mould& M, const Mould& N);

struct MouldCheck {
    bool ok = true;
    std::string detail;  // first counterexample when not ok
};

// Character checks: M^{[]} = 1 and M multiplicative for the quasi-shuffle
// (resp. shuffle) on all pairs of nonempty words within the bounds.
MouldCheck is_symmetrel(const Mould& M, int max_len, const std::vector<Letter>& letters);
MouldCheck is_symmetral(const Mould& M, int max_len, const std::vector<Letter>& letters);
// Bounded by total weight instead of length; used where tables are certified
// per weight slice.
MouldCheck is_symmetrel_by_weight(const Mould& M, long long max_weight);

// Convolution exponential of a linear form vanishing on the empty word,
// taken against deconcatenation. A character whenever alpha kills all
// quasi-shuffle products of nonempty words.
Mould convolution_exponential(std::string name, std::map<Word, Rational> alpha);

// Certified pseudo-random symmetrel mould: a seeded linear form is projected
// onto the annihilator of the span of quasi-shuffle products up to the given
// weight, then convolution-exponentiated. Fails hard if the self-check fails.
Mould gen_symmetrel(std::uint64_t seed, long long max_weight);

// Seeded test moulds. Table moulds send the empty word to 1 and carry default
// 0 outside their table; the rule mould is total.
Mould random_table_mould(std::uint64_t seed, int max_len, const std::vector<Letter>& letters);
Mould random_rule_mould(std::uint64_t seed);
// |value| <= C * kappa^{weight} by construction, on words of weight <= max_weight.
Mould random_geometric_mould(std::uint64_t seed, const Rational& C, const Rational& kappa,
                             long long max_weight);

// Word series truncated by weight; weight is additive under concatenation so
// the truncation is closed under the product.
struct TruncatedWordSeries {
    long long weight_bound = 0;
    WordLC terms;

    friend bool operator==(const TruncatedWordSeries& a, const TruncatedWordSeries& b) {
        return a.weight_bound == b.weight_bound && a.terms == b.terms;
    }
};

TruncatedWordSeries word_series(const Mould& M, long long weight_bound);
TruncatedWordSeries series_mul(const TruncatedWordSeries& a, const TruncatedWordSeries& b);
TruncatedWordSeries series_from(const WordLC& a, long long weight_bound);

// Homogeneous component map: all words of weight kappa weighted by M.
WordLC iota(const Mould& M, Letter kappa);
// The substitution endomorphism determined by iota, applied letterwise and
// truncated at the series bound.
TruncatedWordSeries substitute(const Mould& M, const TruncatedWordSeries& s);

// |M^w| <= C * kappa^{weight(w)} for every word of weight <= max_weight.
MouldCheck growth_audit(const Mould& M, const Rational& C, const Rational& kappa,
                        long long max_weight);
// Derived bounds: the product against C C' (|w|+1) max(kappa,kappa')^{weight},
// the composition against C (1+C')^{|w|-1} (kappa kappa')^{weight}.
MouldCheck growth_product_bound(const Mould& M, const Mould& N, const Rational& C,
                                const Rational& Cp, const Rational& kappa, const Rational& kappap,
                                long long max_weight);
MouldCheck growth_comp_bound(const Mould& M, const Mould& N, const Rational& C,
                             const Rational& Cp, const Rational& kappa, const Rational& kappap,
                             long long max_weight);

// {"default": "0", "entries": {"[1.2]": "1/2", ...}}
std::string mould_table_to_json(const Mould& M);
Mould mould_table_from_json(const std::string& json_text, std::string name);
// Snapshot of values over an explicit word list, in the same JSON shape.
std::string mould_values_json(const Mould& M, const std::vector<Word>& words);

}  // namespace mouldcalc

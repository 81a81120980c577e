#include "mouldcalc/qsym.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mouldcalc {

std::string monomial_text(const OmegaMonomial& m) {
    if (m.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [sym, exp] : m) {
        if (!first) out += "*";
        first = false;
        out += sym + "^" + letter_text(exp);
    }
    return out;
}

std::string polynomial_text(const OmegaPolynomial& p) {
    return lincomb_text(p, [](const OmegaMonomial& m) { return monomial_text(m); });
}

OmegaMonomial monomial_mul(const OmegaMonomial& a, const OmegaMonomial& b) {
    OmegaMonomial r = a;
    for (const auto& [sym, exp] : b) {
        auto [it, inserted] = r.try_emplace(sym, exp);
        if (!inserted) it->second = combine(it->second, exp);
    }
    return r;
}

OmegaPolynomial polynomial_mul(const OmegaPolynomial& a, const OmegaPolynomial& b) {
    OmegaPolynomial r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

OrderedAlphabet OrderedAlphabet::atoms(const std::string& prefix, int n) {
    OrderedAlphabet a;
    for (int i = 1; i <= n; ++i)
        a.variables.push_back(AlphabetVariable{{prefix + std::to_string(i)}});
    return a;
}

namespace {

void check_disjoint(const OrderedAlphabet& X, const OrderedAlphabet& Y) {
    std::set<std::string> seen;
    for (const auto& v : X.variables)
        for (const auto& s : v.parts) seen.insert(s);
    for (const auto& v : Y.variables)
        for (const auto& s : v.parts)
            if (seen.count(s))
                throw std::invalid_argument("alphabets share the symbol '" + s + "'");
}

}  // namespace

OrderedAlphabet sum_alphabet(const OrderedAlphabet& X, const OrderedAlphabet& Y) {
    check_disjoint(X, Y);
    OrderedAlphabet a = X;
    a.variables.insert(a.variables.end(), Y.variables.begin(), Y.variables.end());
    return a;
}

OrderedAlphabet product_alphabet(const OrderedAlphabet& X, const OrderedAlphabet& Y) {
    check_disjoint(X, Y);
    OrderedAlphabet a;
    for (const auto& x : X.variables)
        for (const auto& y : Y.variables) {
            AlphabetVariable v = x;
            v.parts.insert(v.parts.end(), y.parts.begin(), y.parts.end());
            a.variables.push_back(std::move(v));
        }
    return a;
}

namespace {

OmegaMonomial variable_power(const AlphabetVariable& v, Letter exp) {
    OmegaMonomial m;
    for (const auto& s : v.parts) {
        auto [it, inserted] = m.try_emplace(s, exp);
        if (!inserted) it->second = combine(it->second, exp);
    }
    return m;
}

void q_rec(const Word& w, const OrderedAlphabet& X, std::size_t pos, std::size_t next_var,
           const OmegaMonomial& acc, OmegaPolynomial& out) {
    if (pos == w.length()) {
        out.add_term(acc, Rational(1));
        return;
    }
    for (std::size_t i = next_var; i + (w.length() - pos) <= X.size(); ++i) {
        OmegaMonomial m = monomial_mul(acc, variable_power(X.variables[i], w.letters[pos]));
        q_rec(w, X, pos + 1, i + 1, m, out);
    }
}

}  // namespace

OmegaPolynomial q_function(const Word& w, const OrderedAlphabet& X) {
    OmegaPolynomial out;
    if (w.length() > X.size()) return out;  // empty sum
    q_rec(w, X, 0, 0, OmegaMonomial{}, out);
    return out;
}

bool q_product_check(const Word& u, const Word& v, const OrderedAlphabet& X) {
    OmegaPolynomial lhs = polynomial_mul(q_function(u, X), q_function(v, X));
    OmegaPolynomial rhs;
    for (const auto& [w, c] : qsh(u, v)) rhs += q_function(w, X).scaled(c);
    return lhs == rhs;
}

bool q_sum_check(const Word& w, const OrderedAlphabet& X, const OrderedAlphabet& Y) {
    OmegaPolynomial lhs = q_function(w, sum_alphabet(X, Y));
    OmegaPolynomial rhs;
    for (std::size_t j = 0; j <= w.length(); ++j)
        rhs += polynomial_mul(q_function(w.subword(0, j), X),
                              q_function(w.subword(j, w.length()), Y));
    return lhs == rhs;
}

bool q_lex_product_check(const Word& w, const OrderedAlphabet& X, const OrderedAlphabet& Y) {
    OmegaPolynomial lhs = q_function(w, product_alphabet(X, Y));
    OmegaPolynomial rhs;
    std::size_t n = w.length();
    if (n == 0) {
        rhs.add_term(OmegaMonomial{}, Rational(1));
        return lhs == rhs;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<Word> blocks;
        std::size_t start = 0;
        for (std::size_t gap = 0; gap + 1 < n; ++gap)
            if (mask & (std::size_t{1} << gap)) {
                blocks.push_back(w.subword(start, gap + 1));
                start = gap + 1;
            }
        blocks.push_back(w.subword(start, n));
        Word weights;
        for (const Word& b : blocks) weights.letters.push_back(b.weight());
        OmegaPolynomial term = q_function(weights, X);
        for (const Word& b : blocks) term = polynomial_mul(term, q_function(b, Y));
        rhs += term;
    }
    return lhs == rhs;
}

namespace {

// Reads the word pair off a monomial when its X-part uses exactly the first
// variables of X and its Y-part the first variables of Y; otherwise nothing.
// Only meaningful for atom alphabets, which is all the oracle needs.
bool leading_pair(const OmegaMonomial& m, const OrderedAlphabet& X, const OrderedAlphabet& Y,
                  Word& u, Word& v) {
    u = Word();
    v = Word();
    OmegaMonomial rest = m;
    for (const auto& var : X.variables) {
        auto it = rest.find(var.parts.front());
        if (it == rest.end()) break;
        u.letters.push_back(it->second);
        rest.erase(it);
    }
    for (const auto& var : Y.variables) {
        auto it = rest.find(var.parts.front());
        if (it == rest.end()) break;
        v.letters.push_back(it->second);
        rest.erase(it);
    }
    return rest.empty();
}

WordTensor extract_tensor(const OmegaPolynomial& p, const OrderedAlphabet& X,
                          const OrderedAlphabet& Y) {
    WordTensor t;
    for (const auto& [m, c] : p) {
        Word u, v;
        if (leading_pair(m, X, Y, u, v)) t.add_term({u, v}, c);
    }
    return t;
}

}  // namespace

WordTensor deconcat_from_alphabets(const Word& w, const OrderedAlphabet& X,
                                   const OrderedAlphabet& Y) {
    return extract_tensor(q_function(w, sum_alphabet(X, Y)), X, Y);
}

WordTensor gamma_from_alphabets(const Word& w, const OrderedAlphabet& X,
                                const OrderedAlphabet& Y) {
    return extract_tensor(q_function(w, product_alphabet(X, Y)), X, Y);
}

}  // namespace mouldcalc

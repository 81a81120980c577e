#pragma once

#include <map>
#include <string>
#include <vector>

#include "mouldcalc/lincomb.hpp"
#include "mouldcalc/quasishuffle.hpp"
#include "mouldcalc/word.hpp"

namespace mouldcalc {

// Monomial with exponents in the letter semigroup: x^a * x^b = x^{[a+b]}.
using OmegaMonomial = std::map<std::string, Letter>;
using OmegaPolynomial = LinComb<OmegaMonomial>;

std::string monomial_text(const OmegaMonomial& m);  // "x1^1*x2^2", "1" when empty
std::string polynomial_text(const OmegaPolynomial& p);

OmegaMonomial monomial_mul(const OmegaMonomial& a, const OmegaMonomial& b);
OmegaPolynomial polynomial_mul(const OmegaPolynomial& a, const OmegaPolynomial& b);

// A finite totally ordered alphabet. Each variable is a nonempty set of base
// symbols; raising a variable to ω puts exponent ω on each of its parts, which
// is how a lexicographic product pair (x,y) is identified with the product xy.
struct AlphabetVariable {
    std::vector<std::string> parts;
};

struct OrderedAlphabet {
    std::vector<AlphabetVariable> variables;  // the vector order is the total order

    // x1 < x2 < ... < xn
    static OrderedAlphabet atoms(const std::string& prefix, int n);
    std::size_t size() const { return variables.size(); }
};

// Ordinal sum: every variable of Y comes after every variable of X.
// Throws on base-symbol collision.
OrderedAlphabet sum_alphabet(const OrderedAlphabet& X, const OrderedAlphabet& Y);

// Cartesian product with the lexicographic order (X outer, Y inner).
OrderedAlphabet product_alphabet(const OrderedAlphabet& X, const OrderedAlphabet& Y);

// Q_w(X) = sum over strictly increasing variable choices x_1 < ... < x_r of
// x_1^{w_1} ... x_r^{w_r}; zero when |X| < |w|.
OmegaPolynomial q_function(const Word& w, const OrderedAlphabet& X);

// Q_u(X) Q_v(X) = Q_{u qsh v}(X), exact.
bool q_product_check(const Word& u, const Word& v, const OrderedAlphabet& X);

// Q_w(X+Y) = sum over splits w = w'.w'' of Q_{w'}(X) Q_{w''}(Y); the
// deconcatenation coproduct realized on alphabets.
bool q_sum_check(const Word& w, const OrderedAlphabet& X, const OrderedAlphabet& Y);

// Q_w(XY) = sum over block splits of Q_{weights}(X) * product of Q_{block}(Y);
// the internal coproduct realized on alphabets.
bool q_lex_product_check(const Word& w, const OrderedAlphabet& X, const OrderedAlphabet& Y);

// Independent reconstructions of the two coproducts by reading coefficients
// of leading monomials off the alphabet expansions. Neither calls deconcat or
// gamma; they are the oracles those operations are tested against.
WordTensor deconcat_from_alphabets(const Word& w, const OrderedAlphabet& X,
                                   const OrderedAlphabet& Y);
WordTensor gamma_from_alphabets(const Word& w, const OrderedAlphabet& X,
                                const OrderedAlphabet& Y);

}  // namespace mouldcalc

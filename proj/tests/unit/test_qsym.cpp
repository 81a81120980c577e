#include <doctest.h>

#include <stdexcept>

#include "mouldcalc/qsym.hpp"

using namespace mouldcalc;

namespace {

OmegaMonomial mono(std::initializer_list<std::pair<std::string, long long>> parts) {
    OmegaMonomial m;
    for (const auto& [s, e] : parts) m[s] = Letter{e};
    return m;
}

}  // namespace

TEST_CASE("monomial multiplication combines exponents") {
    OmegaMonomial a = mono({{"x1", 1}});
    OmegaMonomial b = mono({{"x1", 2}, {"x2", 1}});
    CHECK(monomial_mul(a, b) == mono({{"x1", 3}, {"x2", 1}}));
    CHECK(monomial_text(mono({{"x1", 1}, {"x2", 2}})) == "x1^1*x2^2");
    CHECK(monomial_text({}) == "1");
}

TEST_CASE("the basis functions") {
    OrderedAlphabet X2 = OrderedAlphabet::atoms("x", 2);

    OmegaPolynomial q1 = q_function(Word::of({1}), X2);
    CHECK(q1.size() == 2);
    CHECK(q1.coeff(mono({{"x1", 1}})) == Rational(1));
    CHECK(q1.coeff(mono({{"x2", 1}})) == Rational(1));

    OmegaPolynomial q12 = q_function(Word::of({1, 2}), X2);
    CHECK(q12 == OmegaPolynomial::basis(mono({{"x1", 1}, {"x2", 2}})));

    CHECK(q_function(Word::of({1, 2, 3}), X2).is_zero());
    CHECK(q_function(Word(), X2) == OmegaPolynomial::basis(OmegaMonomial{}));
}

TEST_CASE("product realizes the quasi-shuffle, expanded by hand") {
    OrderedAlphabet X2 = OrderedAlphabet::atoms("x", 2);
    OmegaPolynomial product =
        polynomial_mul(q_function(Word::of({1}), X2), q_function(Word::of({2}), X2));
    OmegaPolynomial expected;
    expected.add_term(mono({{"x1", 3}}), Rational(1));
    expected.add_term(mono({{"x2", 3}}), Rational(1));
    expected.add_term(mono({{"x1", 1}, {"x2", 2}}), Rational(1));
    expected.add_term(mono({{"x1", 2}, {"x2", 1}}), Rational(1));
    CHECK(product == expected);
    CHECK(q_product_check(Word::of({1}), Word::of({2}), X2));
}

TEST_CASE("product identity holds for all small pairs") {
    OrderedAlphabet X4 = OrderedAlphabet::atoms("x", 4);
    std::vector<Letter> letters = {Letter{1}, Letter{2}};
    for (const Word& u : words_up_to_length(2, letters))
        for (const Word& v : words_up_to_length(2, letters))
            CHECK(q_product_check(u, v, X4));
}

TEST_CASE("ordinal sum realizes deconcatenation") {
    OrderedAlphabet X = OrderedAlphabet::atoms("x", 2);
    OrderedAlphabet Y = OrderedAlphabet::atoms("y", 2);
    CHECK(q_sum_check(Word(), X, Y));
    CHECK(q_sum_check(Word::of({1}), OrderedAlphabet::atoms("x", 1),
                      OrderedAlphabet::atoms("y", 1)));
    CHECK(q_sum_check(Word::of({1, 2}), X, Y));
    // six increasing pairs in an alphabet of four variables
    CHECK(q_function(Word::of({1, 2}), sum_alphabet(X, Y)).size() == 6);

    CHECK(deconcat_from_alphabets(Word::of({1, 2}), X, Y) == deconcat(Word::of({1, 2})));
}

TEST_CASE("lexicographic product realizes the internal coproduct") {
    OrderedAlphabet X1 = OrderedAlphabet::atoms("x", 1);
    OrderedAlphabet Y1 = OrderedAlphabet::atoms("y", 1);
    OmegaPolynomial q = q_function(Word::of({1}), product_alphabet(X1, Y1));
    CHECK(q == OmegaPolynomial::basis(mono({{"x1", 1}, {"y1", 1}})));
    CHECK(q_lex_product_check(Word::of({1}), X1, Y1));

    OrderedAlphabet X = OrderedAlphabet::atoms("x", 2);
    OrderedAlphabet Y = OrderedAlphabet::atoms("y", 2);
    CHECK(q_lex_product_check(Word::of({1, 2}), X, Y));

    OrderedAlphabet X3 = OrderedAlphabet::atoms("x", 3);
    OrderedAlphabet Y3 = OrderedAlphabet::atoms("y", 3);
    CHECK(q_lex_product_check(Word::of({1, 1, 2}), X3, Y3));

    CHECK(gamma_from_alphabets(Word::of({1, 2}), X3, Y3) == gamma(Word::of({1, 2})));
    CHECK(gamma_from_alphabets(Word::of({1, 1, 2}), X3, Y3) == gamma(Word::of({1, 1, 2})));
}

TEST_CASE("symbol collisions are rejected") {
    OrderedAlphabet X = OrderedAlphabet::atoms("x", 2);
    CHECK_THROWS_AS(sum_alphabet(X, X), std::invalid_argument);
    CHECK_THROWS_AS(product_alphabet(X, X), std::invalid_argument);
}

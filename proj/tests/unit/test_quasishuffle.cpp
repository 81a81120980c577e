#include <doctest.h>

#include "mouldcalc/quasishuffle.hpp"
#include "mouldcalc/word.hpp"

using namespace mouldcalc;

namespace {

WordLC lc(std::initializer_list<Word> ws) {
    WordLC r;
    for (const Word& w : ws) r.add_term(w, Rational(1));
    return r;
}

}  // namespace

TEST_CASE("quasi-shuffle of two letters") {
    WordLC got = qsh(Word::of({1}), Word::of({2}));
    CHECK(got == lc({Word::of({1, 2}), Word::of({2, 1}), Word::of({3})}));
    CHECK(word_lc_text(got) == "[1.2] + [2.1] + [3]");
}

TEST_CASE("quasi-shuffle of a pair with a letter") {
    WordLC got = qsh(Word::of({1, 2}), Word::of({3}));
    CHECK(got == lc({Word::of({1, 2, 3}), Word::of({1, 3, 2}), Word::of({3, 1, 2}),
                     Word::of({1, 5}), Word::of({4, 2})}));
}

TEST_CASE("empty word is the unit") {
    for (const Word& w : words_up_to_length(3, {Letter{1}, Letter{2}})) {
        CHECK(qsh(Word(), w) == WordLC::basis(w));
        CHECK(qsh(w, Word()) == WordLC::basis(w));
    }
}

TEST_CASE("recursive and surjection forms agree") {
    std::vector<Letter> letters = {Letter{1}, Letter{2}};
    for (const Word& u : words_up_to_length(3, letters))
        for (const Word& v : words_up_to_length(3, letters))
            CHECK(qsh(u, v) == qsh_via_surjections(u, v));
}

TEST_CASE("shuffle drops the contraction terms") {
    CHECK(shuffle(Word::of({1}), Word::of({2})) ==
          lc({Word::of({1, 2}), Word::of({2, 1})}));
    CHECK(shuffle(Word(), Word::of({1, 2})) == WordLC::basis(Word::of({1, 2})));
    // C(3,1) interleavings of a length-2 with a length-1 word
    WordLC s = shuffle(Word::of({1, 2}), Word::of({4}));
    Rational count(0);
    for (const auto& [w, c] : s) count += c;
    CHECK(count == Rational(3));
}

TEST_CASE("deconcatenation") {
    WordTensor e = deconcat(Word());
    CHECK(e.size() == 1);
    CHECK(e.coeff({Word(), Word()}) == Rational(1));

    WordTensor one = deconcat(Word::of({1}));
    CHECK(one.size() == 2);
    CHECK(one.coeff({Word::of({1}), Word()}) == Rational(1));
    CHECK(one.coeff({Word(), Word::of({1})}) == Rational(1));

    WordTensor three = deconcat(Word::of({1, 2, 3}));
    CHECK(three.size() == 4);
    CHECK(three.coeff({Word::of({1}), Word::of({2, 3})}) == Rational(1));
    CHECK(three.coeff({Word::of({1, 2}), Word::of({3})}) == Rational(1));
}

TEST_CASE("internal coproduct on letters and two-letter words") {
    WordTensor g1 = gamma(Word::of({1}));
    CHECK(g1.size() == 1);
    CHECK(g1.coeff({Word::of({1}), Word::of({1})}) == Rational(1));

    WordTensor g12 = gamma(Word::of({1, 2}));
    CHECK(g12.coeff({Word::of({1, 2}), Word::of({1, 2})}) == Rational(1));
    CHECK(g12.coeff({Word::of({1, 2}), Word::of({2, 1})}) == Rational(1));
    CHECK(g12.coeff({Word::of({1, 2}), Word::of({3})}) == Rational(1));
    CHECK(g12.coeff({Word::of({3}), Word::of({1, 2})}) == Rational(1));
    CHECK(g12.size() == 4);
}

TEST_CASE("a product of letters is group-like") {
    WordLC prod = qsh(Word::of({1}), Word::of({2}));
    WordTensor lhs = gamma(prod);
    WordTensor rhs = tensor_of(prod, prod);
    CHECK(lhs == rhs);
}

TEST_CASE("surjection expansion of the internal coproduct") {
    CHECK(gamma_via_surjections(Word::of({1})) == gamma(Word::of({1})));
    CHECK(gamma_via_surjections(Word::of({1, 2})) == gamma(Word::of({1, 2})));
    CHECK(gamma_via_surjections(Word::of({1, 1, 2})) == gamma(Word::of({1, 1, 2})));
}

TEST_CASE("counits") {
    CHECK(counit_delta(Word()) == Rational(1));
    CHECK(counit_delta(Word::of({1})) == Rational(0));
    CHECK(counit_delta(Word::of({1, 2})) == Rational(0));
    CHECK(counit_gamma(Word()) == Rational(1));
    CHECK(counit_gamma(Word::of({5})) == Rational(1));
    CHECK(counit_gamma(Word::of({1, 2})) == Rational(0));

    // (counit (x) id) applied to the internal coproduct returns the word
    WordLC back;
    for (const auto& [p, c] : gamma(Word::of({1, 2})))
        back.add_term(p.second, c * counit_gamma(p.first));
    CHECK(back == WordLC::basis(Word::of({1, 2})));
}

TEST_CASE("antipode values") {
    CHECK(antipode(Word()) == WordLC::basis(Word()));
    CHECK(antipode(Word::of({1})) == WordLC::basis(Word::of({1}), Rational(-1)));
    // one step of the recursion: S([1.2]) = -[1.2] + [1] qsh [2] = [2.1] + [3]
    CHECK(antipode(Word::of({1, 2})) == lc({Word::of({2, 1}), Word::of({3})}));
}

TEST_CASE("antipode is the convolution inverse of the identity") {
    for (const Word& w : words_up_to_length(4, {Letter{1}, Letter{2}})) {
        WordLC conv;
        for (const auto& [p, c] : deconcat(w))
            conv += qsh(antipode(p.first), WordLC::basis(p.second)).scaled(c);
        CHECK(conv == WordLC::basis(Word(), counit_delta(w)));
        CHECK(antipode(w) == antipode_right(w));
    }
}

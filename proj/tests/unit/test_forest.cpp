#include <doctest.h>

#include <stdexcept>

#include "mouldcalc/forest.hpp"

using namespace mouldcalc;

namespace {

Forest F(const std::string& s) { return Forest::parse(s); }

}  // namespace

TEST_CASE("parse, canonicalize, print") {
    Forest t = F("3(1,2)");
    REQUIRE(t.trees.size() == 1);
    CHECK(t.trees[0].dec == Letter{3});
    CHECK(t.trees[0].children.size() == 2);
    CHECK(t.text() == "3(1,2)");
    CHECK(F("3(2,1)").text() == "3(1,2)");

    Forest two = F("1*2");
    CHECK(two.trees.size() == 2);
    CHECK(two.text() == "1*2");
    CHECK(F("2*1").text() == "1*2");

    CHECK(F("1").is_empty());
    CHECK(F("1").text() == "1");
    // the lone vertex decorated 1 keeps an explicit child list when printed,
    // so parsing the output gives the forest back
    CHECK(F("1()").text() == "1()");
    CHECK_FALSE(F("1()").is_empty());
    CHECK(F("2").text() == "2");

    CHECK(F("4(2(1),3)").text() == "4(2(1),3)");
    CHECK(F("4(3,2(1))").text() == "4(2(1),3)");
    CHECK_THROWS_AS(F("3(1,"), std::invalid_argument);
    CHECK_THROWS_AS(F("x"), std::invalid_argument);

    for (const Forest& f : forests_up_to_vertices(3, {Letter{1}, Letter{2}}))
        CHECK(Forest::parse(f.text()) == f);
}

TEST_CASE("vertex count and weight") {
    CHECK(F("1").vertex_count() == 0);
    CHECK(F("3(1,2)").vertex_count() == 3);
    CHECK(F("3(1,2)").weight() == Letter{6});
    CHECK(F("1*2").weight() == Letter{3});
    CHECK(F("1").weight() == Letter{0});
}

TEST_CASE("symmetry factors") {
    CHECK(aut(F("1()")) == 1);
    CHECK(aut(F("1*1")) == 2);
    CHECK(aut(F("1(2,2)")) == 2);
    CHECK(aut(F("1(2,3)")) == 1);
    CHECK(aut(F("1*1*1")) == 6);
    CHECK(aut(F("1(2,2,2)")) == 6);
    CHECK(aut(F("1(2(1),2(1))")) == 2);
    CHECK(aut(F("1*2")) == 1);
}

TEST_CASE("grafting a forest onto a new root") {
    CHECK(Forest::single(bplus(Letter{3}, F("1*2"))) == F("3(1,2)"));
    CHECK(Forest::single(bplus(Letter{1}, Forest::empty())) == F("1()"));
}

TEST_CASE("admissible cut coproduct") {
    ForestTensor e = forest_delta(Forest::empty());
    CHECK(e.size() == 1);
    CHECK(e.coeff({Forest::empty(), Forest::empty()}) == Rational(1));

    ForestTensor v = forest_delta(F("1()"));
    CHECK(v.size() == 2);
    CHECK(v.coeff({F("1()"), Forest::empty()}) == Rational(1));
    CHECK(v.coeff({Forest::empty(), F("1()")}) == Rational(1));

    // two-vertex tree, root 1 and child 2: the only proper cut leaves the
    // crown leaf on the left leg and the trunk root on the right leg
    ForestTensor t = forest_delta(F("1(2)"));
    CHECK(t.size() == 3);
    CHECK(t.coeff({F("1(2)"), Forest::empty()}) == Rational(1));
    CHECK(t.coeff({Forest::empty(), F("1(2)")}) == Rational(1));
    CHECK(t.coeff({F("2"), F("1()")}) == Rational(1));
}

TEST_CASE("covering subforests") {
    auto single = covering_subforests(F("2"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == F("2"));
    CHECK(single[0].second == F("2"));

    auto two = covering_subforests(F("1(2)"));
    REQUIRE(two.size() == 2);
    bool saw_discrete = false, saw_whole = false;
    for (const auto& [g, contracted] : two) {
        if (g == F("1()*2")) {
            saw_discrete = true;
            CHECK(contracted == F("1(2)"));
        }
        if (g == F("1(2)")) {
            saw_whole = true;
            CHECK(contracted == F("3"));
        }
    }
    CHECK(saw_discrete);
    CHECK(saw_whole);

    CHECK(covering_subforests(F("3(1,2)")).size() == 4);
    CHECK(covering_subforests(Forest::empty()).size() == 1);
}

TEST_CASE("internal coproduct on forests") {
    ForestTensor g = forest_gamma(F("2"));
    CHECK(g.size() == 1);
    CHECK(g.coeff({F("2"), F("2")}) == Rational(1));

    ForestTensor t = forest_gamma(F("1(2)"));
    CHECK(t.size() == 2);
    CHECK(t.coeff({F("1(2)"), F("1()*2")}) == Rational(1));
    CHECK(t.coeff({F("3"), F("1(2)")}) == Rational(1));

    for (const Forest& f : forests_up_to_vertices(4, {Letter{1}, Letter{2}}))
        for (const auto& [p, c] : forest_gamma(f)) {
            CHECK(p.first.weight() == f.weight());
            CHECK(p.second.weight() == f.weight());
        }
}

TEST_CASE("contracting arborification") {
    WordLC got = arborify(F("3(1,2)"));
    WordLC expected;
    expected.add_term(Word::of({1, 2, 3}), Rational(1));
    expected.add_term(Word::of({2, 1, 3}), Rational(1));
    expected.add_term(Word::of({3, 3}), Rational(1));
    CHECK(got == expected);

    CHECK(arborify(F("2")) == WordLC::basis(Word::of({2})));
    CHECK(arborify(Forest::empty()) == WordLC::basis(Word()));

    // morphism onto the quasi-shuffle product
    for (const Forest& f : forests_up_to_vertices(2, {Letter{1}, Letter{2}}))
        for (const Forest& g : forests_up_to_vertices(2, {Letter{1}, Letter{2}}))
            CHECK(arborify(forest_mul(f, g)) == qsh(arborify(f), arborify(g)));
}

TEST_CASE("simple arborification") {
    WordLC got = arborify_simple(F("3(1,2)"));
    WordLC expected;
    expected.add_term(Word::of({1, 2, 3}), Rational(1));
    expected.add_term(Word::of({2, 1, 3}), Rational(1));
    CHECK(got == expected);

    WordLC pair = arborify_simple(F("1*2"));
    WordLC expected2;
    expected2.add_term(Word::of({1, 2}), Rational(1));
    expected2.add_term(Word::of({2, 1}), Rational(1));
    CHECK(pair == expected2);

    for (const Forest& f : forests_up_to_vertices(3, {Letter{1}, Letter{2}}))
        for (const Forest& g : forests_up_to_vertices(1, {Letter{1}, Letter{2}}))
            CHECK(arborify_simple(forest_mul(f, g)) ==
                  shuffle(arborify_simple(f), arborify_simple(g)));
}

TEST_CASE("pre-Lie grafting") {
    Tree a = Tree::leaf(1), b = Tree::leaf(2);
    TreeLC ab = graft(a, b);
    CHECK(ab == TreeLC::basis(Tree::make(Letter{2}, {a})));

    // two grafting sites on a two-vertex tree
    Tree bc = Tree::make(Letter{2}, {Tree::leaf(3)});
    TreeLC got = graft(a, bc);
    TreeLC expected;
    expected.add_term(Tree::make(Letter{2}, {Tree::leaf(3), a}), Rational(1));
    expected.add_term(Tree::make(Letter{2}, {Tree::make(Letter{3}, {a})}), Rational(1));
    CHECK(got == expected);
}

TEST_CASE("Grossman-Larson product") {
    Forest a = F("1()"), b = F("2");
    CHECK(gl_product(Forest::empty(), a) == ForestLC::basis(a));
    CHECK(gl_product(a, Forest::empty()) == ForestLC::basis(a));

    ForestLC got = gl_product(a, b);
    ForestLC expected;
    expected.add_term(F("1()*2"), Rational(1));
    expected.add_term(F("2(1)"), Rational(1));
    CHECK(got == expected);

    // pairing against the admissible-cut coproduct with symmetry factors
    std::vector<Forest> small = forests_up_to_vertices(2, {Letter{1}, Letter{2}});
    std::vector<Forest> all = forests_up_to_vertices(4, {Letter{1}, Letter{2}});
    for (const Forest& f : small)
        for (const Forest& g : small) {
            ForestLC prod = gl_product(f, g);
            for (const Forest& h : all) {
                Rational lhs = prod.coeff(h) * Rational(aut(h));
                Rational rhs =
                    Rational(aut(f)) * Rational(aut(g)) * forest_delta(h).coeff({f, g});
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("enumeration counts over two decorations") {
    std::vector<Letter> two = {Letter{1}, Letter{2}};
    CHECK(trees_with_vertices(1, two).size() == 2);
    CHECK(trees_with_vertices(2, two).size() == 4);
    CHECK(trees_with_vertices(3, two).size() == 14);
    CHECK(trees_with_vertices(4, two).size() == 52);
    CHECK(forests_up_to_vertices(4, two).size() == 143);
}

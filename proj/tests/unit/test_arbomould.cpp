#include <doctest.h>

#include <stdexcept>

#include "mouldcalc/arbomould.hpp"

using namespace mouldcalc;

namespace {

Forest F(const std::string& s) { return Forest::parse(s); }
const std::vector<Letter> kTwo = {Letter{1}, Letter{2}};

}  // namespace

TEST_CASE("builtins and the arborified composition identity mould") {
    ArboMould eps = arbo_builtin("eps");
    CHECK(eps.eval(Forest::empty()) == Rational(1));
    CHECK(eps.eval(F("1()")) == Rational(0));

    ArboMould I = arbo_builtin("I");
    CHECK(I.eval(F("2")) == Rational(1));
    CHECK(I.eval(Forest::empty()) == Rational(0));
    CHECK(I.eval(F("1(2)")) == Rational(0));
    CHECK(I.eval(F("1()*2")) == Rational(0));

    // the arborification of the word-level I is a different mould: the
    // product of two vertices contracts onto a single letter
    ArboMould arbo_I = arborify_mould(builtin_mould("I"));
    CHECK(arbo_I.eval(F("2")) == Rational(1));
    CHECK(arbo_I.eval(Forest::empty()) == Rational(0));
    CHECK(arbo_I.eval(F("1()*2")) == Rational(1));
    CHECK(arbo_I.eval(F("1(2)")) == Rational(0));

    CHECK_THROWS_AS(arbo_builtin("nope"), std::invalid_argument);
}

TEST_CASE("arborified exponential on the worked example") {
    ArboMould e = arborify_mould(builtin_mould("exp"));
    // words [1.2.3], [2.1.3], [3.3] give 1/6 + 1/6 + 1/2
    CHECK(e.eval(F("3(1,2)")) == Rational(5, 6));
    ArboMould eps_arbo = arborify_mould(builtin_mould("eps"));
    CHECK(eps_arbo.eval(Forest::empty()) == Rational(1));
    CHECK(eps_arbo.eval(F("1()")) == Rational(0));
}

TEST_CASE("product on forests") {
    ArboMould eps = arbo_builtin("eps");
    ArboMould A = random_table_arbomould(21, 3, kTwo);
    for (const Forest& f : forests_up_to_vertices(3, kTwo)) {
        CHECK(arbo_mul(eps, A).eval(f) == A.eval(f));
        CHECK(arbo_mul(A, eps).eval(f) == A.eval(f));
    }
    ArboMould B = random_table_arbomould(22, 3, kTwo);
    Forest v = F("2");
    CHECK(arbo_mul(A, B).eval(v) ==
          A.eval(Forest::empty()) * B.eval(v) + A.eval(v) * B.eval(Forest::empty()));
}

TEST_CASE("composition and diamond on a two-vertex tree") {
    ArboMould A = random_table_arbomould(23, 3, kTwo);
    ArboMould B = random_table_arbomould(24, 3, kTwo);
    Forest t = F("1(2)");
    Rational comp = arbo_comp(A, B).eval(t);
    CHECK(comp == A.eval(t) * B.eval(F("1()")) * B.eval(F("2")) +
                      A.eval(F("3")) * B.eval(t));
    Rational dia = arbo_diamond(A, B).eval(t);
    CHECK(dia == A.eval(t) * B.eval(F("1()*2")) + A.eval(F("3")) * B.eval(t));
    CHECK(arbo_comp(A, B).eval(Forest::empty()) == A.eval(Forest::empty()));
    CHECK(arbo_diamond(A, B).eval(Forest::empty()) == A.eval(Forest::empty()));
}

TEST_CASE("composition units") {
    ArboMould A = random_table_arbomould(25, 4, kTwo);
    ArboMould I = arbo_builtin("I");
    for (const Forest& f : forests_up_to_vertices(4, kTwo))
        CHECK(arbo_comp(A, I).eval(f) == A.eval(f));
    // not a left unit: two bare vertices evaluate to zero
    CHECK(arbo_comp(I, A).eval(F("1()*2")) == Rational(0));
}

TEST_CASE("separative moulds") {
    CHECK(is_separative(arbo_builtin("eps"), 4, kTwo).ok);
    CHECK(is_separative(arborify_mould(builtin_mould("J")), 4, kTwo).ok);
    MouldCheck c = is_separative(arbo_builtin("I"), 4, kTwo);
    CHECK_FALSE(c.ok);
    MouldCheck c2 = is_separative(random_table_arbomould(26, 3, kTwo), 3, kTwo);
    CHECK_FALSE(c2.ok);
}

TEST_CASE("series of a mould") {
    TruncatedSSeries unit = s_series(arbo_builtin("eps"), 2, kTwo);
    CHECK(unit.terms == ForestLC::basis(Forest::empty()));

    // one letter, two vertices: aut factors 1, 1, 2, 1
    std::vector<Letter> one = {Letter{1}};
    ArboMould A = random_table_arbomould(27, 2, one);
    TruncatedSSeries s = s_series(A, 2, one);
    CHECK(s.terms.coeff(Forest::empty()) == A.eval(Forest::empty()));
    CHECK(s.terms.coeff(F("1()")) == A.eval(F("1()")));
    CHECK(s.terms.coeff(F("1*1")) == A.eval(F("1*1")) / Rational(2));
    CHECK(s.terms.coeff(F("1(1)")) == A.eval(F("1(1)")));
}

TEST_CASE("series of a product is the Grossman-Larson product of series") {
    ArboMould A = random_table_arbomould(28, 3, kTwo);
    ArboMould B = random_table_arbomould(29, 3, kTwo);
    TruncatedSSeries lhs = s_series(arbo_mul(A, B), 3, kTwo);
    TruncatedSSeries rhs = gl_series_mul(s_series(A, 3, kTwo), s_series(B, 3, kTwo));
    CHECK(lhs == rhs);
}

TEST_CASE("arbo table JSON round trip") {
    ArboMould A = random_table_arbomould(30, 2, kTwo);
    ArboMould back = arbomould_table_from_json(arbomould_table_to_json(A), "back");
    for (const Forest& f : forests_up_to_vertices(3, kTwo))
        CHECK(A.eval(f) == back.eval(f));
}

#include <doctest.h>

#include <stdexcept>

#include <set>

#include "mouldcalc/surjection.hpp"

using namespace mouldcalc;

TEST_CASE("packed word representation") {
    Surjection s = Surjection::parse("13224");
    CHECK(s.domain() == 5);
    CHECK(s.range == 4);
    CHECK(s(2) == 3);
    CHECK(s.text() == "13224");
    CHECK_THROWS_AS(Surjection({1, 3}), std::invalid_argument);  // 2 missing
    CHECK_THROWS_AS(Surjection::parse("1224"), std::invalid_argument);
    CHECK(Surjection::parse("123456789A").range == 10);
}

TEST_CASE("split surjections parse with the bar") {
    SplitSurjection phi = SplitSurjection::parse("1224|113");
    CHECK(phi.p() == 4);
    CHECK(phi.q() == 3);
    CHECK(phi.text() == "1224|113");
    CHECK(phi.is_weak_quasi_shuffle());
    CHECK_FALSE(phi.is_quasi_shuffle());
    CHECK(SplitSurjection::parse("12|").text() == "12|");
    CHECK(SplitSurjection::parse("|12").p() == 0);
}

TEST_CASE("quasi-shuffle enumeration") {
    auto both = enumerate_qsh(1, 1, 0);
    REQUIRE(both.size() == 2);
    CHECK(both[0].text() == "1|2");
    CHECK(both[1].text() == "2|1");

    auto contracted = enumerate_qsh(1, 1, 1);
    REQUIRE(contracted.size() == 1);
    CHECK(contracted[0].text() == "1|1");

    // five surjections total, matching the five terms of [1.2] qsh [3]
    CHECK(enumerate_qsh(2, 1).size() == 5);
    CHECK(enumerate_qsh(2, 1, 2).empty());
    CHECK(enumerate_qsh(2, 1, -1).empty());
    CHECK(enumerate_qsh(0, 0).size() == 1);
}

TEST_CASE("weak quasi-shuffle enumeration") {
    auto one = enumerate_wqsh(1, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].text() == "1|");

    auto pairs = enumerate_wqsh(1, 1);
    std::set<std::string> got;
    for (const auto& s : pairs) got.insert(s.text());
    CHECK(got == std::set<std::string>{"1|1", "1|2", "2|1"});

    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3 - p; ++q) {
            std::set<SplitSurjection> weak;
            for (const auto& s : enumerate_wqsh(p, q)) weak.insert(s);
            for (const auto& s : enumerate_qsh(p, q)) CHECK(weak.count(s) == 1);
        }
}

TEST_CASE("factorization of a weak quasi-shuffle") {
    auto f = factorize_wqsh(SplitSurjection::parse("1224|113"));
    CHECK(f.delta.text() == "124|13");
    CHECK(f.sigma.text() == "1223|445");

    // a quasi-shuffle factors through itself with the staircase identity
    SplitSurjection phi = SplitSurjection::parse("13|12");
    auto g = factorize_wqsh(phi);
    CHECK(g.delta.surj == phi.surj);
    CHECK(g.sigma.surj == Surjection::identity(4));

    CHECK_THROWS_AS(factorize_wqsh(SplitSurjection::parse("21|1")), std::invalid_argument);

    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            if (p + q == 0) continue;
            for (const auto& w : enumerate_wqsh(p, q)) {
                auto fact = factorize_wqsh(w);
                CHECK(compose(fact.delta.surj, fact.sigma.surj) == w.surj);
            }
        }
}

TEST_CASE("fiber of 1224|113 matches the worked table") {
    auto fiber = fiber_qsh(SplitSurjection::parse("1224|113"));
    REQUIRE(fiber.size() == 5);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [eta, sig] : fiber) got.emplace(eta.text(), sig.text());
    std::set<std::pair<std::string, std::string>> expected = {
        {"1457|236", "1112234"}, {"2457|136", "1112234"}, {"3457|126", "1112234"},
        {"1346|125", "112234"},  {"2346|125", "112234"}};
    CHECK(got == expected);
}

TEST_CASE("fiber cardinality 5*5*1*3") {
    CHECK(fiber_qsh(SplitSurjection::parse("1224|112334")).size() == 75);
}

TEST_CASE("fiber entries recompose") {
    SplitSurjection phi = SplitSurjection::parse("122|12");
    for (const auto& [eta, sig] : fiber_qsh(phi)) {
        CHECK(eta.is_quasi_shuffle());
        CHECK(sig.is_nondecreasing());
        CHECK(compose(sig, eta.surj) == phi.surj);
    }
}

TEST_CASE("standardization") {
    CHECK(standardize({1, 3, 2, 2, 4}).text() == "14235");
    CHECK(standardize({2, 4, 1, 3}).text() == "2413");
    CHECK(standardize({1, 1, 1}).text() == "123");
}

TEST_CASE("surjections act on words") {
    Word w = Word::of({1, 2});
    Surjection to_one = Surjection::parse("11");
    CHECK(apply_surjection(w, to_one) == Word::of({3}));
    CHECK(block(w, to_one, 1) == Word::of({1, 2}));

    Word v = Word::of({1, 2, 3});
    CHECK(apply_surjection(v, Surjection::identity(3)) == v);
    CHECK(block(v, Surjection::identity(3), 2) == Word::of({2}));

    CHECK_THROWS_AS(apply_surjection(w, Surjection::identity(3)), std::invalid_argument);
}

TEST_CASE("action composes contravariantly") {
    Word w = Word::of({1, 2, 1, 3});
    for (const auto& sigma : enumerate_all_surjections(4))
        for (const auto& tau : enumerate_all_surjections(sigma.range))
            CHECK(apply_surjection(apply_surjection(w, sigma), tau) ==
                  apply_surjection(w, compose(tau, sigma)));
}

TEST_CASE("nondecreasing surjections are compositions") {
    CHECK(enumerate_nondecreasing_surjections(1).size() == 1);
    CHECK(enumerate_nondecreasing_surjections(3).size() == 4);
    CHECK(enumerate_nondecreasing_surjections(5).size() == 16);
    for (const auto& s : enumerate_nondecreasing_surjections(4)) CHECK(s.is_nondecreasing());
}

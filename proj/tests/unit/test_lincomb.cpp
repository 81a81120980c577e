#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mouldcalc/lincomb.hpp"

using namespace mouldcalc;

namespace {

using SLC = LinComb<std::string>;

std::uint64_t mix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SLC random_vec(std::uint64_t& stream) {
    static const std::vector<std::string> basis = {"a", "b", "c", "d"};
    SLC v;
    for (const auto& b : basis) {
        long long num = static_cast<long long>(mix(stream) % 11) - 5;
        long long den = static_cast<long long>(mix(stream) % 5) + 1;
        v.add_term(b, Rational(num, den));
    }
    return v;
}

}  // namespace

TEST_CASE("addition cancels and normalizes") {
    SLC w = SLC::basis("w");
    CHECK((w + w.scaled(Rational(-1))).is_zero());
    SLC u = SLC::basis("u");
    SLC v = SLC::basis("v", Rational(2));
    SLC sum = u + v;
    CHECK(sum.coeff("u") == Rational(1));
    CHECK(sum.coeff("v") == Rational(2));
    SLC halves = SLC::basis("u", Rational(1, 2)) + SLC::basis("u", Rational(1, 3));
    CHECK(halves == SLC::basis("u", Rational(5, 6)));
}

TEST_CASE("scaling") {
    SLC u = SLC::basis("u", Rational(5));
    CHECK(u.scaled(Rational(0)).is_zero());
    CHECK(u.scaled(Rational(1)) == u);
    CHECK(SLC::basis("u", Rational(3, 4)).scaled(Rational(2, 3)) ==
          SLC::basis("u", Rational(1, 2)));
}

TEST_CASE("linear extension") {
    SLC a = SLC::basis("u", Rational(1, 2));
    auto ident = [](const std::string& b) { return SLC::basis(b); };
    CHECK(a.extend(ident) == a);
    auto zero = [](const std::string&) { return SLC(); };
    CHECK(a.extend(zero).is_zero());
    auto f = [](const std::string& b) {
        return b == "u" ? SLC::basis("v", Rational(2)) : SLC::basis(b);
    };
    CHECK(a.extend(f) == SLC::basis("v"));
}

TEST_CASE("extension composes") {
    std::uint64_t stream = 42;
    auto f = [](const std::string& b) {
        return b == "a" ? SLC::basis("b") + SLC::basis("c") : SLC::basis(b, Rational(2));
    };
    auto g = [](const std::string& b) {
        return b == "b" ? SLC::basis("d", Rational(1, 2)) : SLC::basis(b);
    };
    for (int i = 0; i < 20; ++i) {
        SLC v = random_vec(stream);
        SLC lhs = v.extend(f).extend(g);
        SLC rhs = v.extend([&](const std::string& b) { return f(b).extend(g); });
        CHECK(lhs == rhs);
    }
}

TEST_CASE("vector space axioms on random triples") {
    std::uint64_t stream = 7;
    for (int i = 0; i < 25; ++i) {
        SLC x = random_vec(stream), y = random_vec(stream), z = random_vec(stream);
        Rational c(static_cast<long long>(mix(stream) % 9) - 4,
                   static_cast<long long>(mix(stream) % 4) + 1);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x + y).scaled(c) == x.scaled(c) + y.scaled(c));
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("row space membership") {
    SLC u = SLC::basis("u"), v = SLC::basis("v");

    auto [in_empty, rem_empty] = row_space_membership<std::string>({}, v);
    CHECK_FALSE(in_empty);
    CHECK(rem_empty == v);

    auto [in_scaled, rem_scaled] = row_space_membership<std::string>({v}, v.scaled(Rational(2)));
    CHECK(in_scaled);
    CHECK(rem_scaled.is_zero());

    // one vector u+v; probing u eliminates the pivot coordinate u and leaves -v
    auto [in_uv, rem_uv] = row_space_membership<std::string>({u + v}, u);
    CHECK_FALSE(in_uv);
    CHECK(rem_uv == v.scaled(Rational(-1)));
}

TEST_CASE("row reduction is idempotent") {
    std::uint64_t stream = 99;
    RowReducer<std::string> red;
    std::vector<SLC> rows;
    for (int i = 0; i < 6; ++i) {
        SLC v = random_vec(stream);
        rows.push_back(v);
        red.insert(v);
    }
    std::size_t rank = red.rank();
    RowReducer<std::string> again;
    for (const auto& [pivot, row] : red.rows()) again.insert(row);
    CHECK(again.rank() == rank);
    for (const auto& [pivot, row] : red.rows()) {
        CHECK(again.reduce(row).is_zero());
        CHECK(again.rows().count(pivot) == 1);
        CHECK(again.rows().at(pivot) == row);
    }
    // everything inserted lies in the span
    for (const auto& v : rows) CHECK(red.reduce(v).is_zero());
}

TEST_CASE("text form") {
    auto print = [](const std::string& s) { return "[" + s + "]"; };
    SLC a;
    CHECK(lincomb_text(a, print) == "0");
    a.add_term("u", Rational(1));
    a.add_term("v", Rational(-1, 2));
    a.add_term("w", Rational(3));
    CHECK(lincomb_text(a, print) == "[u] - 1/2*[v] + 3*[w]");
    SLC b = SLC::basis("u", Rational(-1));
    CHECK(lincomb_text(b, print) == "-[u]");
}

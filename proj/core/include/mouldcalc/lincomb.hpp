#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mouldcalc/rational.hpp"

namespace mouldcalc {

// Finitely supported linear combination over a canonically ordered basis B.
// Zero coefficients are never stored, so equality is structural and
// independent of the order terms were inserted in.
template <class B>
class LinComb {
public:
    using Terms = std::map<B, Rational>;

    LinComb() = default;

    static LinComb zero() { return LinComb(); }

    static LinComb basis(B b, Rational c = Rational(1)) {
        LinComb r;
        r.add_term(std::move(b), std::move(c));
        return r;
    }

    void add_term(B b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(b), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }

    LinComb scaled(const Rational& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [b, x] : terms_) r.terms_.emplace(b, x * c);
        return r;
    }
    friend LinComb operator*(const Rational& c, const LinComb& a) { return a.scaled(c); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    // Linear extension of a basis map f : B -> LinComb<C>.
    template <class F>
    auto extend(F&& f) const {
        using Out = decltype(f(std::declval<const B&>()));
        Out r;
        for (const auto& [b, c] : terms_) r += f(b).scaled(c);
        return r;
    }

    // Application of the linear form b -> f(b).
    template <class F>
    Rational pair_with(F&& f) const {
        Rational r(0);
        for (const auto& [b, c] : terms_) r += c * f(b);
        return r;
    }

private:
    Terms terms_;
};

template <class B1, class B2>
using Tensor = LinComb<std::pair<B1, B2>>;

template <class B1, class B2, class B3>
using Tensor3 = LinComb<std::tuple<B1, B2, B3>>;

template <class B1, class B2>
Tensor<B1, B2> tensor_of(const LinComb<B1>& a, const LinComb<B2>& b) {
    Tensor<B1, B2> r;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            r.add_term({x, y}, cx * cy);
    return r;
}

// f on the left leg, g on the right leg, both LinComb valued.
template <class B1, class B2, class F, class G>
auto tensor_map(const Tensor<B1, B2>& t, F&& f, G&& g) {
    using C1 = typename decltype(f(std::declval<const B1&>()))::Terms::key_type;
    using C2 = typename decltype(g(std::declval<const B2&>()))::Terms::key_type;
    Tensor<C1, C2> r;
    for (const auto& [bb, c] : t) {
        auto fa = f(bb.first);
        auto gb = g(bb.second);
        for (const auto& [x, cx] : fa)
            for (const auto& [y, cy] : gb)
                r.add_term({x, y}, c * cx * cy);
    }
    return r;
}

// Componentwise product of tensors: (a(x)b) * (c(x)d) = mul1(a,c) (x) mul2(b,d).
template <class B1, class B2, class M1, class M2>
Tensor<B1, B2> tensor_product(const Tensor<B1, B2>& s, const Tensor<B1, B2>& t,
                              M1&& mul1, M2&& mul2) {
    Tensor<B1, B2> r;
    for (const auto& [p, cp] : s)
        for (const auto& [q, cq] : t) {
            auto left = mul1(p.first, q.first);
            auto right = mul2(p.second, q.second);
            Rational c = cp * cq;
            for (const auto& [x, cx] : left)
                for (const auto& [y, cy] : right)
                    r.add_term({x, y}, c * cx * cy);
        }
    return r;
}

// Exact Gaussian elimination over the rationals, in reduced row echelon form.
// Pivot of a row is its first basis element in canonical order; pivots are
// eliminated from all other stored rows, and pivot coefficients are fixed to 1.
template <class B>
class RowReducer {
public:
    // Remainder of v after elimination against the stored rows.
    LinComb<B> reduce(LinComb<B> v) const {
        for (const auto& [pivot, row] : rows_) {
            Rational c = v.coeff(pivot);
            if (!c.is_zero()) v -= row.scaled(c);
        }
        return v;
    }

    // Inserts v's remainder into the reduced set. Returns false if v was
    // already in the span.
    bool insert(const LinComb<B>& v) {
        LinComb<B> rem = reduce(v);
        if (rem.is_zero()) return false;
        const B& pivot = rem.begin()->first;
        LinComb<B> row = rem.scaled(Rational(1) / rem.begin()->second);
        for (auto& [p, r] : rows_) {
            Rational c = r.coeff(pivot);
            if (!c.is_zero()) r -= row.scaled(c);
        }
        rows_.emplace(pivot, std::move(row));
        return true;
    }

    bool contains(const LinComb<B>& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    const std::map<B, LinComb<B>>& rows() const { return rows_; }

private:
    std::map<B, LinComb<B>> rows_;
};

// Whether probe lies in the span of the given vectors, together with the
// remainder of probe after elimination.
template <class B>
std::pair<bool, LinComb<B>> row_space_membership(const std::vector<LinComb<B>>& vectors,
                                                 const LinComb<B>& probe) {
    RowReducer<B> red;
    for (const auto& v : vectors) red.insert(v);
    LinComb<B> rem = red.reduce(probe);
    return {rem.is_zero(), rem};
}

// Text form: signed terms "c*basis" joined by " + " / " - ", coefficient 1 elided.
template <class B, class Printer>
std::string lincomb_text(const LinComb<B>& a, Printer&& print_basis) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : a) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (!mag.is_one()) {
            out += mag.text();
            out += "*";
        }
        out += print_basis(b);
    }
    return out;
}

}  // namespace mouldcalc

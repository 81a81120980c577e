#include "mouldcalc/quasishuffle.hpp"

#include <map>
#include <mutex>

#include "mouldcalc/surjection.hpp"

namespace mouldcalc {

std::string word_lc_text(const WordLC& a) {
    return lincomb_text(a, [](const Word& w) { return w.text(); });
}

std::string word_tensor_text(const WordTensor& t) {
    return lincomb_text(t, [](const std::pair<Word, Word>& p) {
        return p.first.text() + "(x)" + p.second.text();
    });
}

namespace {

WordLC qsh_uncached(const Word& u, const Word& v);

// Session-wide cache; the product is commutative, so keys are ordered pairs.
WordLC qsh_cached(const Word& u, const Word& v) {
    static std::map<std::pair<Word, Word>, WordLC> cache;
    static std::mutex mtx;
    std::pair<Word, Word> key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    WordLC r = qsh_uncached(key.first, key.second);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(r)).first->second;
}

WordLC qsh_uncached(const Word& u, const Word& v) {
    WordLC r;
    if (u.empty()) {
        r.add_term(v, Rational(1));
        return r;
    }
    if (v.empty()) {
        r.add_term(u, Rational(1));
        return r;
    }
    Letter a = u.letters.front();
    Letter b = v.letters.front();
    Word u_tail = u.subword(1, u.length());
    Word v_tail = v.subword(1, v.length());
    auto prepend = [](Letter head, const WordLC& tail) {
        WordLC out;
        for (const auto& [w, c] : tail) {
            Word x = Word::single(head);
            x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.end());
            out.add_term(std::move(x), c);
        }
        return out;
    };
    r += prepend(a, qsh_cached(u_tail, v));
    r += prepend(b, qsh_cached(u, v_tail));
    r += prepend(combine(a, b), qsh_cached(u_tail, v_tail));
    return r;
}

}  // namespace

WordLC qsh(const Word& u, const Word& v) { return qsh_cached(u, v); }

WordLC qsh(const WordLC& a, const WordLC& b) {
    WordLC r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b)
            r += qsh(u, v).scaled(cu * cv);
    return r;
}

WordLC qsh_many(const std::vector<Word>& ws) {
    WordLC r = WordLC::basis(Word());
    for (const Word& w : ws) r = qsh(r, WordLC::basis(w));
    return r;
}

WordLC qsh_via_surjections(const Word& u, const Word& v) {
    Word w = concat(u, v);
    WordLC r;
    for (const SplitSurjection& s :
         enumerate_qsh(static_cast<int>(u.length()), static_cast<int>(v.length())))
        r.add_term(apply_surjection(w, s.surj), Rational(1));
    return r;
}

WordLC shuffle(const Word& u, const Word& v) {
    WordLC r;
    std::size_t total = u.length() + v.length();
    for (const auto& [w, c] : qsh(u, v))
        if (w.length() == total) r.add_term(w, c);
    return r;
}

WordLC shuffle(const WordLC& a, const WordLC& b) {
    WordLC r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b)
            r += shuffle(u, v).scaled(cu * cv);
    return r;
}

WordTensor deconcat(const Word& w) {
    WordTensor t;
    for (std::size_t j = 0; j <= w.length(); ++j)
        t.add_term({w.subword(0, j), w.subword(j, w.length())}, Rational(1));
    return t;
}

WordTensor gamma(const Word& w) {
    WordTensor t;
    std::size_t n = w.length();
    if (n == 0) {
        t.add_term({Word(), Word()}, Rational(1));
        return t;
    }
    // Each bitmask over the n-1 gaps is one split into consecutive blocks.
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
        WordLC right = qsh_many(blocks);
        for (const auto& [x, c] : right) t.add_term({weights, x}, c);
    }
    return t;
}

WordTensor gamma(const WordLC& a) {
    WordTensor t;
    for (const auto& [w, c] : a) t += gamma(w).scaled(c);
    return t;
}

WordTensor gamma_via_surjections(const Word& w) {
    WordTensor t;
    if (w.empty()) {
        t.add_term({Word(), Word()}, Rational(1));
        return t;
    }
    for (const Surjection& s : enumerate_nondecreasing_surjections(static_cast<int>(w.length()))) {
        Word weights = apply_surjection(w, s);
        std::vector<Word> fibers;
        for (int k = 1; k <= s.range; ++k) fibers.push_back(block(w, s, k));
        WordLC right = qsh_many(fibers);
        for (const auto& [x, c] : right) t.add_term({weights, x}, c);
    }
    return t;
}

Rational counit_delta(const Word& w) { return w.empty() ? Rational(1) : Rational(0); }

Rational counit_gamma(const Word& w) { return w.length() <= 1 ? Rational(1) : Rational(0); }

namespace {

WordLC antipode_cached(const Word& w, bool left) {
    static std::map<std::pair<Word, bool>, WordLC> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({w, left});
        if (it != cache.end()) return it->second;
    }
    WordLC r;
    if (w.empty()) {
        r.add_term(Word(), Rational(1));
    } else {
        r.add_term(w, Rational(-1));
        for (std::size_t j = 1; j < w.length(); ++j) {
            Word pre = w.subword(0, j);
            Word suf = w.subword(j, w.length());
            if (left)
                r -= qsh(antipode_cached(pre, left), WordLC::basis(suf));
            else
                r -= qsh(WordLC::basis(pre), antipode_cached(suf, left));
        }
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::make_pair(w, left), std::move(r)).first->second;
}

}  // namespace

WordLC antipode(const Word& w) { return antipode_cached(w, true); }

WordLC antipode(const WordLC& a) {
    WordLC r;
    for (const auto& [w, c] : a) r += antipode(w).scaled(c);
    return r;
}

WordLC antipode_right(const Word& w) { return antipode_cached(w, false); }

WordLC append_letter(const WordLC& a, Letter b) {
    WordLC r;
    for (const auto& [w, c] : a) {
        Word x = w;
        x.letters.push_back(b);
        r.add_term(std::move(x), c);
    }
    return r;
}

}  // namespace mouldcalc

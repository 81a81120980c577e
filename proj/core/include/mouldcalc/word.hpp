#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mouldcalc {

// A letter of the alphabet. The default alphabet is the positive integers
// under addition; `combine` is the semigroup law and the value order is the
// total order. Swapping in another commutative semigroup (multi-indices, say)
// only means changing this type, the operations below never look inside.
struct Letter {
    long long value = 0;

    auto operator<=>(const Letter&) const = default;
};

inline Letter combine(Letter a, Letter b) { return Letter{a.value + b.value}; }

std::string letter_text(Letter a);

// A finite sequence of letters. Canonical order is lexicographic on the
// letter sequence (a strict prefix sorts first), which fixes printing order.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
    static Word single(Letter a) { return Word({a}); }
    static Word of(std::initializer_list<long long> values);

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    // Semigroup sum of the letters; the empty word has the zero symbol.
    Letter weight() const;

    Word subword(std::size_t from, std::size_t to) const;  // [from, to)

    // Grammar: "[]" or "[a.b.c]" with positive integer letters.
    static Word parse(const std::string& text);
    std::string text() const;

    auto operator<=>(const Word&) const = default;
};

Word concat(const Word& u, const Word& v);

// Enumeration helpers, all in deterministic order.
std::vector<Word> words_of_length(std::size_t n, const std::vector<Letter>& letters);
std::vector<Word> words_up_to_length(std::size_t max_len, const std::vector<Letter>& letters,
                                     bool include_empty = true);
// All words over positive integer letters of the given weight (compositions).
std::vector<Word> words_of_weight(long long weight);
std::vector<Word> words_up_to_weight(long long max_weight, bool include_empty = true);

}  // namespace mouldcalc

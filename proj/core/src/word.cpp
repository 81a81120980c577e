#include "mouldcalc/word.hpp"

#include <stdexcept>

namespace mouldcalc {

std::string letter_text(Letter a) { return std::to_string(a.value); }

Word Word::of(std::initializer_list<long long> values) {
    std::vector<Letter> ls;
    ls.reserve(values.size());
    for (long long v : values) ls.push_back(Letter{v});
    return Word(std::move(ls));
}

Letter Word::weight() const {
    Letter w{0};
    for (Letter a : letters) w = Letter{w.value + a.value};
    return w;
}

Word Word::subword(std::size_t from, std::size_t to) const {
    return Word(std::vector<Letter>(letters.begin() + from, letters.begin() + to));
}

Word Word::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("Word: expected '[...]', got '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    Word w;
    if (body.empty()) return w;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t dot = body.find('.', pos);
        std::string piece = body.substr(pos, dot == std::string::npos ? dot : dot - pos);
        if (piece.empty()) throw std::invalid_argument("Word: empty letter in '" + text + "'");
        std::size_t used = 0;
        long long v = std::stoll(piece, &used);
        if (used != piece.size() || v <= 0)
            throw std::invalid_argument("Word: bad letter '" + piece + "' in '" + text + "'");
        w.letters.push_back(Letter{v});
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return w;
}

std::string Word::text() const {
    std::string out = "[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ".";
        out += letter_text(letters[i]);
    }
    out += "]";
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

std::vector<Word> words_of_length(std::size_t n, const std::vector<Letter>& letters) {
    std::vector<Word> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<Word> shorter = words_of_length(n - 1, letters);
    for (const Word& w : shorter)
        for (Letter a : letters) {
            Word x = w;
            x.letters.push_back(a);
            out.push_back(std::move(x));
        }
    return out;
}

std::vector<Word> words_up_to_length(std::size_t max_len, const std::vector<Letter>& letters,
                                     bool include_empty) {
    std::vector<Word> out;
    for (std::size_t n = include_empty ? 0 : 1; n <= max_len; ++n)
        for (Word& w : words_of_length(n, letters)) out.push_back(std::move(w));
    return out;
}

std::vector<Word> words_of_weight(long long weight) {
    std::vector<Word> out;
    if (weight <= 0) return out;
    // compositions of `weight`: first letter a, then any composition of the rest
    for (long long a = 1; a < weight; ++a)
        for (const Word& rest : words_of_weight(weight - a)) {
            Word w = Word::single(Letter{a});
            w.letters.insert(w.letters.end(), rest.letters.begin(), rest.letters.end());
            out.push_back(std::move(w));
        }
    out.push_back(Word::single(Letter{weight}));
    return out;
}

std::vector<Word> words_up_to_weight(long long max_weight, bool include_empty) {
    std::vector<Word> out;
    if (include_empty) out.emplace_back();
    for (long long w = 1; w <= max_weight; ++w)
        for (Word& x : words_of_weight(w)) out.push_back(std::move(x));
    return out;
}

}  // namespace mouldcalc

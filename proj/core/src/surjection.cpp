#include "mouldcalc/surjection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mouldcalc {

namespace {

bool is_packed(const std::vector<int>& img, int& range_out) {
    int mx = 0;
    for (int v : img) {
        if (v < 1) return false;
        mx = std::max(mx, v);
    }
    std::vector<bool> seen(mx + 1, false);
    for (int v : img) seen[v] = true;
    for (int v = 1; v <= mx; ++v)
        if (!seen[v]) return false;
    range_out = mx;
    return true;
}

char symbol_of(int v) {
    if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
    if (v >= 10 && v <= 35) return static_cast<char>('A' + (v - 10));
    throw std::invalid_argument("Surjection: value out of printable range");
}

int value_of(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    throw std::invalid_argument(std::string("Surjection: bad symbol '") + c + "'");
}

}  // namespace

Surjection::Surjection(std::vector<int> img) : images(std::move(img)) {
    if (images.empty()) {
        range = 0;
        return;
    }
    if (!is_packed(images, range))
        throw std::invalid_argument("Surjection: image sequence is not packed");
}

Surjection Surjection::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Surjection(std::move(img));
}

bool Surjection::is_nondecreasing() const {
    return std::is_sorted(images.begin(), images.end());
}

Surjection Surjection::parse(const std::string& text) {
    std::vector<int> img;
    img.reserve(text.size());
    for (char c : text) img.push_back(value_of(c));
    return Surjection(std::move(img));
}

std::string Surjection::text() const {
    std::string out;
    out.reserve(images.size());
    for (int v : images) out += symbol_of(v);
    return out;
}

Surjection compose(const Surjection& tau, const Surjection& sigma) {
    if (tau.domain() != sigma.range)
        throw std::invalid_argument("compose: domain of tau must equal range of sigma");
    std::vector<int> img;
    img.reserve(sigma.images.size());
    for (int v : sigma.images) img.push_back(tau.images[v - 1]);
    return Surjection(std::move(img));
}

bool SplitSurjection::is_quasi_shuffle() const {
    const auto& img = surj.images;
    for (int j = 1; j < split; ++j)
        if (img[j - 1] >= img[j]) return false;
    for (int j = split + 1; j < surj.domain(); ++j)
        if (img[j - 1] >= img[j]) return false;
    return true;
}

bool SplitSurjection::is_weak_quasi_shuffle() const {
    const auto& img = surj.images;
    for (int j = 1; j < split; ++j)
        if (img[j - 1] > img[j]) return false;
    for (int j = split + 1; j < surj.domain(); ++j)
        if (img[j - 1] > img[j]) return false;
    return true;
}

SplitSurjection SplitSurjection::parse(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("SplitSurjection: missing '|' in '" + text + "'");
    std::vector<int> img;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == bar) continue;
        img.push_back(value_of(text[i]));
    }
    return SplitSurjection(Surjection(std::move(img)), static_cast<int>(bar));
}

std::string SplitSurjection::text() const {
    std::string out;
    for (int j = 0; j < surj.domain(); ++j) {
        if (j == split) out += '|';
        out += symbol_of(surj.images[j]);
    }
    if (split == surj.domain()) out += '|';
    return out;
}

namespace {

// Backtracking over positions; candidate values tried in increasing order, so
// the output is lexicographic in the image sequence.
void enumerate_split(int p, int q, int target, bool strict,
                     std::vector<int>& img, std::vector<int>& count, int filled,
                     std::vector<SplitSurjection>& out) {
    int n = p + q;
    if (filled == n) {
        for (int v = 1; v <= target; ++v)
            if (count[v] == 0) return;
        out.emplace_back(Surjection(img), p);
        return;
    }
    int lo = 1;
    if (filled > 0 && filled != p) {
        int prev = img[filled - 1];
        lo = strict ? prev + 1 : prev;
    }
    for (int v = lo; v <= target; ++v) {
        img[filled] = v;
        ++count[v];
        enumerate_split(p, q, target, strict, img, count, filled + 1, out);
        --count[v];
    }
}

std::vector<SplitSurjection> enumerate_split_surjections(int p, int q, int target, bool strict) {
    std::vector<SplitSurjection> out;
    if (p < 0 || q < 0 || target < 0) return out;
    if (p + q == 0) {
        if (target == 0) out.emplace_back(Surjection(), 0);
        return out;
    }
    if (target == 0 || target > p + q) return out;
    std::vector<int> img(p + q, 0), count(target + 1, 0);
    enumerate_split(p, q, target, strict, img, count, 0, out);
    return out;
}

}  // namespace

std::vector<SplitSurjection> enumerate_qsh(int p, int q, int r) {
    if (r < 0 || r > std::min(p, q)) return {};
    return enumerate_split_surjections(p, q, p + q - r, /*strict=*/true);
}

std::vector<SplitSurjection> enumerate_qsh(int p, int q) {
    std::vector<SplitSurjection> out;
    for (int r = 0; r <= std::min(p, q); ++r)
        for (auto& s : enumerate_qsh(p, q, r)) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SplitSurjection> enumerate_wqsh(int p, int q) {
    std::vector<SplitSurjection> out;
    for (int s = 1; s <= p + q; ++s)
        for (auto& w : enumerate_split_surjections(p, q, s, /*strict=*/false))
            out.push_back(std::move(w));
    if (p + q == 0) out.emplace_back(Surjection(), 0);
    std::sort(out.begin(), out.end());
    return out;
}

WqshFactorization factorize_wqsh(const SplitSurjection& phi) {
    if (!phi.is_weak_quasi_shuffle())
        throw std::invalid_argument("factorize_wqsh: input is not a weak quasi-shuffle");
    int p = phi.p(), q = phi.q();
    const auto& img = phi.surj.images;

    // Distinct values reached on each side, in increasing order.
    std::vector<int> left, right;
    for (int j = 0; j < p; ++j)
        if (left.empty() || left.back() != img[j]) left.push_back(img[j]);
    for (int j = p; j < p + q; ++j)
        if (right.empty() || right.back() != img[j]) right.push_back(img[j]);
    int tp = static_cast<int>(left.size());

    std::vector<int> delta_img = left;
    delta_img.insert(delta_img.end(), right.begin(), right.end());

    std::vector<int> sigma_img(p + q);
    for (int j = 0; j < p; ++j) {
        auto it = std::lower_bound(left.begin(), left.end(), img[j]);
        sigma_img[j] = static_cast<int>(it - left.begin()) + 1;
    }
    for (int j = p; j < p + q; ++j) {
        auto it = std::lower_bound(right.begin(), right.end(), img[j]);
        sigma_img[j] = tp + static_cast<int>(it - right.begin()) + 1;
    }

    WqshFactorization f;
    f.sigma = SplitSurjection(Surjection(std::move(sigma_img)), p);
    f.delta = SplitSurjection(Surjection(std::move(delta_img)), tp);
    return f;
}

std::vector<std::pair<SplitSurjection, Surjection>> fiber_qsh(const SplitSurjection& phi) {
    if (!phi.is_weak_quasi_shuffle())
        throw std::invalid_argument("fiber_qsh: input is not a weak quasi-shuffle");
    int p = phi.p(), q = phi.q(), s = phi.surj.range;
    const auto& img = phi.surj.images;

    // Per value j: how many positions of each side land on j.
    std::vector<int> a(s + 1, 0), b(s + 1, 0);
    for (int j = 0; j < p; ++j) ++a[img[j]];
    for (int j = p; j < p + q; ++j) ++b[img[j]];

    std::vector<std::vector<SplitSurjection>> choices(s + 1);
    for (int j = 1; j <= s; ++j) choices[j] = enumerate_qsh(a[j], b[j]);

    std::vector<std::pair<SplitSurjection, Surjection>> out;
    std::vector<int> pick(s + 1, 0);
    while (true) {
        // Assemble eta from the chosen per-value quasi-shuffles, shifting each
        // by the sizes of the previous images; sigma[eta] is the staircase.
        std::vector<int> eta_img(p + q, 0);
        std::vector<int> sig_img;
        int offset = 0;
        std::vector<int> placed_a(s + 1, 0), placed_b(s + 1, 0);
        std::vector<int> offsets(s + 1, 0);
        for (int j = 1; j <= s; ++j) {
            const SplitSurjection& etaj = choices[j][pick[j]];
            offsets[j] = offset;
            int cj = etaj.surj.range;
            for (int k = 0; k < cj; ++k) sig_img.push_back(j);
            offset += cj;
        }
        for (int pos = 0; pos < p; ++pos) {
            int j = img[pos];
            const SplitSurjection& etaj = choices[j][pick[j]];
            eta_img[pos] = offsets[j] + etaj.surj.images[placed_a[j]++];
        }
        for (int pos = p; pos < p + q; ++pos) {
            int j = img[pos];
            const SplitSurjection& etaj = choices[j][pick[j]];
            eta_img[pos] = offsets[j] + etaj.surj.images[a[j] + placed_b[j]++];
        }
        out.emplace_back(SplitSurjection(Surjection(std::move(eta_img)), p),
                         Surjection(std::move(sig_img)));

        int j = s;
        while (j >= 1 && pick[j] + 1 == static_cast<int>(choices[j].size())) pick[j--] = 0;
        if (j < 1) break;
        ++pick[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Surjection standardize(const std::vector<long long>& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return w[i] < w[j]; });
    std::vector<int> img(n);
    for (int rank = 0; rank < n; ++rank) img[order[rank]] = rank + 1;
    return Surjection(std::move(img));
}

Word apply_surjection(const Word& w, const Surjection& sigma) {
    if (static_cast<int>(w.length()) != sigma.domain())
        throw std::invalid_argument("apply_surjection: word length does not match domain");
    std::vector<Letter> out(sigma.range, Letter{0});
    std::vector<bool> touched(sigma.range, false);
    for (int j = 0; j < sigma.domain(); ++j) {
        int k = sigma.images[j] - 1;
        out[k] = touched[k] ? combine(out[k], w.letters[j]) : w.letters[j];
        touched[k] = true;
    }
    return Word(std::move(out));
}

Word block(const Word& w, const Surjection& sigma, int k) {
    if (static_cast<int>(w.length()) != sigma.domain())
        throw std::invalid_argument("block: word length does not match domain");
    Word out;
    for (int j = 0; j < sigma.domain(); ++j)
        if (sigma.images[j] == k) out.letters.push_back(w.letters[j]);
    return out;
}

namespace {

void enumerate_surjections_rec(int n, bool nondecreasing, std::vector<int>& img, int filled,
                               int used_max, std::vector<Surjection>& out) {
    if (filled == n) {
        out.emplace_back(Surjection(img));
        return;
    }
    int lo = nondecreasing && filled > 0 ? img[filled - 1] : 1;
    // Values stay packed as we go: never exceed used_max + 1.
    for (int v = lo; v <= used_max + 1; ++v) {
        img[filled] = v;
        enumerate_surjections_rec(n, nondecreasing, img, filled + 1, std::max(used_max, v), out);
    }
}

}  // namespace

std::vector<Surjection> enumerate_nondecreasing_surjections(int n) {
    std::vector<Surjection> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> img(n, 0);
    enumerate_surjections_rec(n, /*nondecreasing=*/true, img, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Surjection> enumerate_all_surjections(int n) {
    std::vector<Surjection> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Image sequences whose set of values is {1..s}: generate words over 1..n
    // and keep the packed ones.
    std::vector<int> img(n, 0);
    struct Rec {
        int n;
        std::vector<int>& img;
        std::vector<Surjection>& out;
        void go(int filled) {
            if (filled == n) {
                int range = 0;
                if (is_packed(img, range)) out.emplace_back(Surjection(img));
                return;
            }
            for (int v = 1; v <= n; ++v) {
                img[filled] = v;
                go(filled + 1);
            }
        }
    };
    Rec rec{n, img, out};
    rec.go(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mouldcalc

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mouldcalc/word.hpp"

namespace mouldcalc {

// Surjective map {1..n} ->> {1..s}, stored as its packed word: the image
// sequence uses exactly the letters {1..s}.
struct Surjection {
    std::vector<int> images;
    int range = 0;

    Surjection() = default;
    explicit Surjection(std::vector<int> img);
    static Surjection identity(int n);

    int domain() const { return static_cast<int>(images.size()); }
    int operator()(int j) const { return images[j - 1]; }  // 1-based

    bool is_nondecreasing() const;

    // Packed-word text, one symbol per position: 1..9 then A..Z for 10..35.
    static Surjection parse(const std::string& text);
    std::string text() const;

    auto operator<=>(const Surjection&) const = default;
};

// (tau . sigma)(j) = tau(sigma(j))
Surjection compose(const Surjection& tau, const Surjection& sigma);

// A surjection with a split point p: order conditions apply separately to
// positions 1..p and p+1..p+q.
struct SplitSurjection {
    Surjection surj;
    int split = 0;

    SplitSurjection() = default;
    SplitSurjection(Surjection s, int p) : surj(std::move(s)), split(p) {}

    int p() const { return split; }
    int q() const { return surj.domain() - split; }

    bool is_quasi_shuffle() const;       // strictly increasing on both sides
    bool is_weak_quasi_shuffle() const;  // nondecreasing on both sides

    // "1224|113"
    static SplitSurjection parse(const std::string& text);
    std::string text() const;

    auto operator<=>(const SplitSurjection&) const = default;
};

// All (p,q)-quasi-shuffles of type r, i.e. surjections {1..p+q} ->> {1..p+q-r}
// strictly increasing on both sides, in lexicographic order of the image
// sequence. Invalid r yields the empty list.
std::vector<SplitSurjection> enumerate_qsh(int p, int q, int r);
std::vector<SplitSurjection> enumerate_qsh(int p, int q);  // all types

// Weak (p,q)-quasi-shuffles of every type, lexicographic order.
std::vector<SplitSurjection> enumerate_wqsh(int p, int q);

struct WqshFactorization {
    SplitSurjection sigma;  // nondecreasing, sigma_p < sigma_{p+1}
    SplitSurjection delta;  // a quasi-shuffle
};

// Unique decomposition phi = delta . sigma of a weak quasi-shuffle.
WqshFactorization factorize_wqsh(const SplitSurjection& phi);

// All quasi-shuffles eta through which phi factorizes with a nondecreasing
// surjection sigma[eta], i.e. phi = sigma[eta] . eta, together with sigma[eta].
std::vector<std::pair<SplitSurjection, Surjection>> fiber_qsh(const SplitSurjection& phi);

// The unique permutation sigma with w_i < w_j or (w_i = w_j and i < j)
// implying sigma_i < sigma_j.
Surjection standardize(const std::vector<long long>& w);

// The word w^sigma: position k carries the semigroup sum of the letters in
// the fiber of k. Requires |w| = domain of sigma.
Word apply_surjection(const Word& w, const Surjection& sigma);

// Subword of the sigma-preimages of k, in increasing position order.
Word block(const Word& w, const Surjection& sigma, int k);

// All nondecreasing surjections {1..n} ->> {1..s}, every s, lex order.
std::vector<Surjection> enumerate_nondecreasing_surjections(int n);

// Every surjection {1..n} ->> {1..s} for every s, lex order.
std::vector<Surjection> enumerate_all_surjections(int n);

}  // namespace mouldcalc

#include "braidfloor/braid.hpp"

#include <algorithm>
#include <numeric>

namespace braidfloor {

Permutation::Permutation(int degree) {
    if (degree < 1) throw invalid_braid("permutation degree must be positive");
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v) - 1])
            throw invalid_braid("images do not form a permutation");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree()) throw strand_mismatch("permutation degrees differ");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[i] = next.images_[static_cast<std::size_t>(images_[i]) - 1];
    return from_images(std::move(out));
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(images_[j]) - 1;
        }
    }
    return cycles;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

namespace detail {

void free_reduce_letters(std::vector<Letter>& letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters.swap(out);
}

}  // namespace detail

BraidWord free_reduce(const BraidWord& w) {
    std::vector<Letter> letters = w.letters();
    detail::free_reduce_letters(letters);
    return {w.strands(), std::move(letters)};
}

BraidWord inverse(const BraidWord& w) {
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : letters) l.sign = -l.sign;
    return {w.strands(), std::move(letters)};
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw strand_mismatch("cannot multiply words with different strand counts");
    std::vector<Letter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return {a.strands(), std::move(letters)};
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
    return concat(concat(g, w), inverse(g));
}

BraidWord embed(const BraidWord& w, int strands) {
    if (strands < w.strands())
        throw invalid_braid("embedding target must not have fewer strands");
    return {strands, w.letters()};
}

BraidWord garside_delta(int n) {
    if (n < 2) throw invalid_braid("Delta requires at least 2 strands");
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
    for (int top = n - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) letters.push_back({i, 1});
    return {n, std::move(letters)};
}

BraidWord delta_power(int n, int k) {
    const BraidWord delta = garside_delta(n);
    const BraidWord factor = k >= 0 ? delta : inverse(delta);
    BraidWord out(n);
    for (int r = 0; r < (k >= 0 ? k : -k); ++r) out = concat(out, factor);
    return out;
}

BraidWord band_generator(int n, int i, int j) {
    if (n < 2 || i < 1 || i >= j || j > n)
        throw invalid_braid("band generator requires 1 <= i < j <= n");
    std::vector<Letter> letters;
    letters.reserve(2 * static_cast<std::size_t>(j - i) - 1);
    for (int k = i; k <= j - 2; ++k) letters.push_back({k, 1});
    letters.push_back({j - 1, 1});
    for (int k = j - 2; k >= i; --k) letters.push_back({k, -1});
    return {n, std::move(letters)};
}

Permutation permutation(const BraidWord& w) {
    const int n = w.strands();
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<int> pos(static_cast<std::size_t>(n));  // pos[v-1] = strand mapped to v
    std::iota(img.begin(), img.end(), 1);
    std::iota(pos.begin(), pos.end(), 1);
    for (const Letter& l : w.letters()) {
        const int a = pos[static_cast<std::size_t>(l.index) - 1];
        const int b = pos[static_cast<std::size_t>(l.index)];
        std::swap(img[static_cast<std::size_t>(a) - 1], img[static_cast<std::size_t>(b) - 1]);
        std::swap(pos[static_cast<std::size_t>(l.index) - 1], pos[static_cast<std::size_t>(l.index)]);
    }
    return Permutation::from_images(std::move(img));
}

int closure_components(const BraidWord& w) { return permutation(w).cycle_count(); }

long exponent_sum(const BraidWord& w) {
    long sum = 0;
    for (const Letter& l : w.letters()) sum += l.sign;
    return sum;
}

Sigma1Counts sigma1_counts(const BraidWord& w) {
    Sigma1Counts counts;
    for (const Letter& l : w.letters()) {
        if (l.index != 1) continue;
        (l.sign > 0 ? counts.positive : counts.negative) += 1;
    }
    return counts;
}

}  // namespace braidfloor

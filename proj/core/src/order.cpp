#include "braidfloor/order.hpp"

#include <algorithm>
#include <cstddef>

namespace braidfloor {

const char* to_string(OrderResult r) {
    switch (r) {
        case OrderResult::Less: return "less";
        case OrderResult::Equal: return "equal";
        case OrderResult::Greater: return "greater";
    }
    return "?";
}

namespace {

struct Handle {
    std::size_t open = 0;
    std::size_t close = 0;
};

// Finds the handle whose closing letter is leftmost: the first position q
// whose nearest preceding letter of index <= index(q) has exactly index(q)
// and the opposite sign. Such a handle has an interior of strictly larger
// indices and contains no nested handle of any index.
bool find_first_handle(const std::vector<Letter>& word, int strands, Handle& out) {
    // last_pos[i] = latest position holding index i, or -1.
    static thread_local std::vector<long> last_pos;
    last_pos.assign(static_cast<std::size_t>(strands), -1);
    for (std::size_t q = 0; q < word.size(); ++q) {
        const Letter l = word[q];
        long p = -1;
        for (int j = 1; j <= l.index; ++j) p = std::max(p, last_pos[static_cast<std::size_t>(j)]);
        if (p >= 0) {
            const Letter opener = word[static_cast<std::size_t>(p)];
            if (opener.index == l.index && opener.sign == -l.sign) {
                out = {static_cast<std::size_t>(p), q};
                return true;
            }
        }
        last_pos[static_cast<std::size_t>(l.index)] = static_cast<long>(q);
    }
    return false;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w, const ReduceOptions& options) {
    std::vector<Letter> word = w.letters();
    detail::free_reduce_letters(word);

    std::vector<Letter> next;
    Handle h;
    std::uint64_t steps = 0;
    while (find_first_handle(word, w.strands(), h)) {
        if (++steps > options.step_limit)
            throw step_limit_exceeded("handle reduction exceeded " +
                                      std::to_string(options.step_limit) + " steps");
        const int i = word[h.open].index;
        const int e = word[h.open].sign;
        next.clear();
        next.reserve(word.size() + 2 * (h.close - h.open));
        next.insert(next.end(), word.begin(), word.begin() + static_cast<long>(h.open));
        for (std::size_t r = h.open + 1; r < h.close; ++r) {
            const Letter l = word[r];
            if (l.index == i + 1) {
                next.push_back({i + 1, -e});
                next.push_back({i, l.sign});
                next.push_back({i + 1, e});
            } else {
                next.push_back(l);
            }
        }
        next.insert(next.end(), word.begin() + static_cast<long>(h.close) + 1, word.end());
        detail::free_reduce_letters(next);
        word.swap(next);
    }
    return {w.strands(), std::move(word)};
}

SigmaClass sigma_classify(const BraidWord& w) {
    if (w.empty()) return {SigmaKind::Empty, 0};
    int main_index = w.strands();
    for (const Letter& l : w.letters()) main_index = std::min(main_index, l.index);
    bool has_positive = false;
    bool has_negative = false;
    for (const Letter& l : w.letters()) {
        if (l.index != main_index) continue;
        (l.sign > 0 ? has_positive : has_negative) = true;
    }
    if (has_positive && has_negative)
        throw unreduced_word("word carries both signs at its minimal index; handle-reduce first");
    return {has_positive ? SigmaKind::Positive : SigmaKind::Negative, main_index};
}

OrderResult compare(const BraidWord& a, const BraidWord& b, const ReduceOptions& options) {
    if (a.strands() != b.strands())
        throw strand_mismatch("cannot compare words with different strand counts");
    const SigmaClass cls = sigma_classify(handle_reduce(concat(inverse(a), b), options));
    switch (cls.kind) {
        case SigmaKind::Empty: return OrderResult::Equal;
        case SigmaKind::Positive: return OrderResult::Less;
        case SigmaKind::Negative: return OrderResult::Greater;
    }
    return OrderResult::Equal;
}

bool is_trivial(const BraidWord& w, const ReduceOptions& options) {
    return handle_reduce(w, options).empty();
}

FloorResult dehornoy_floor(const BraidWord& w, const ReduceOptions& options) {
    const int n = w.strands();
    const long cap = static_cast<long>(w.length()) + 1;
    for (long m = 0; m <= cap; ++m) {
        const int k = static_cast<int>(2 * m + 2);
        const OrderResult lower = compare(delta_power(n, -k), w, options);
        if (lower != OrderResult::Less) continue;
        const OrderResult upper = compare(w, delta_power(n, k), options);
        if (upper != OrderResult::Less) continue;
        return {m, lower, upper};
    }
    throw floor_cap_exceeded("no floor found below length(w) + 1; this is a bug");
}

}  // namespace braidfloor

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "braidfloor/errors.hpp"

namespace braidfloor {

/// One letter of a braid word: the Artin generator sigma_index, or its
/// inverse when sign is -1.
struct Letter {
    int index = 1;  ///< generator index, 1 <= index <= strands - 1
    int sign = 1;   ///< +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

constexpr Letter inverse(Letter l) { return {l.index, -l.sign}; }

/// A braid group element of B_n given as a word in the Artin generators.
/// The empty word is the identity. Values are immutable after construction
/// and every operation on them is a pure function, so unrestricted
/// concurrent use is safe.
///
/// operator== is literal word equality; equality as group elements is
/// decided by the order engine (compare / is_trivial).
class BraidWord {
public:
    explicit BraidWord(int strands) : BraidWord(strands, {}) {}

    BraidWord(int strands, std::vector<Letter> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 2)
            throw invalid_braid("braid must have at least 2 strands");
        for (const Letter& l : letters_) {
            if (l.index < 1 || l.index >= strands_)
                throw invalid_braid("generator index out of range for strand count");
            if (l.sign != 1 && l.sign != -1)
                throw invalid_braid("letter sign must be +1 or -1");
        }
    }

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

/// A bijection of {1, ..., n}, 1-based to match strand labels.
class Permutation {
public:
    explicit Permutation(int degree);  ///< identity
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int image_of(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    /// Composition "apply *this first, then next".
    Permutation then(const Permutation& next) const;

    int cycle_count() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Permutation() = default;
    std::vector<int> images_;
};

/// Cancels adjacent sigma_i^e sigma_i^-e pairs to a fixed point with a
/// single stack pass. Idempotent; never increases length.
BraidWord free_reduce(const BraidWord& w);

/// Letters reversed with signs flipped.
BraidWord inverse(const BraidWord& w);

/// Group multiplication a * b. Throws strand_mismatch unless the strand
/// counts agree; mixed-strand products are hard errors because the
/// Dehornoy floor depends on the ambient group.
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// g * w * g^-1.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

/// The same letters reinterpreted in a larger braid group. Used for Markov
/// stabilization; ordinary operations never embed implicitly.
BraidWord embed(const BraidWord& w, int strands);

/// Garside fundamental braid Delta of B_n:
/// (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1 s2)(s1), length n(n-1)/2.
BraidWord garside_delta(int n);

/// Delta^k; negative k uses the inverse word.
BraidWord delta_power(int n, int k);

/// Band generator a_{i,j} = (s_i ... s_{j-2}) s_{j-1} (s_{j-2}^-1 ... s_i^-1)
/// for 1 <= i < j <= n; length 2(j-i) - 1.
BraidWord band_generator(int n, int i, int j);

/// Image of w under B_n -> S_n sending sigma_i to the transposition
/// (i, i+1); insensitive to letter signs.
Permutation permutation(const BraidWord& w);

/// Number of components of the closure of w = number of cycles of its
/// permutation.
int closure_components(const BraidWord& w);

/// Sum of letter signs (writhe of the closed-braid diagram).
long exponent_sum(const BraidWord& w);

struct Sigma1Counts {
    long positive = 0;  ///< occurrences of sigma_1
    long negative = 0;  ///< occurrences of sigma_1^-1

    friend bool operator==(const Sigma1Counts&, const Sigma1Counts&) = default;
};

/// Counts of sigma_1 letters in the given representative (not an invariant
/// of the group element).
Sigma1Counts sigma1_counts(const BraidWord& w);

namespace detail {
/// Stack-pass free reduction on a raw letter sequence.
void free_reduce_letters(std::vector<Letter>& letters);
}  // namespace detail

}  // namespace braidfloor

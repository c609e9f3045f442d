#pragma once

#include <cstdint>

#include "braidfloor/braid.hpp"

namespace braidfloor {

/// Outcome of a Dehornoy comparison. Equal holds exactly when the compared
/// words are identical group elements.
enum class OrderResult { Less, Equal, Greater };

const char* to_string(OrderResult r);

enum class SigmaKind { Empty, Positive, Negative };

/// Sign class of a handle-free word. Positive(i) means the word contains
/// sigma_i, no letter of smaller index, and no sigma_i^-1; Negative(i) is
/// the mirror condition.
struct SigmaClass {
    SigmaKind kind = SigmaKind::Empty;
    int main_index = 0;  ///< minimal occurring generator index; 0 when Empty

    friend bool operator==(const SigmaClass&, const SigmaClass&) = default;
};

/// Dehornoy floor of a braid: the minimal m >= 0 with
/// Delta^(-2m-2) <_D beta <_D Delta^(2m+2), together with the two witness
/// comparisons at the accepted m.
struct FloorResult {
    long floor = 0;
    OrderResult lower_witness = OrderResult::Less;  ///< compare(Delta^(-2m-2), beta)
    OrderResult upper_witness = OrderResult::Less;  ///< compare(beta, Delta^(2m+2))
};

/// Safety valve for the rewriting loop. Handle reduction provably
/// terminates; exceeding the limit therefore signals a bug, not a long run.
struct ReduceOptions {
    std::uint64_t step_limit = 10'000'000;
};

/// Dehornoy handle reduction.
///
/// A sigma_i-handle is a subword sigma_i^e u sigma_i^-e (e = +-1) whose
/// interior u contains only letters of index > i. Reducing it deletes the
/// two bounding letters and rewrites every sigma_{i+1}^d in u as
/// sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e, then free-reduces. The word is
/// rewritten until no handle remains, always reducing the handle whose
/// closing letter is leftmost; that handle contains no nested handle, so
/// the reduction is permitted and the strategy is deterministic.
///
/// The result represents the same element of B_n and is either empty or
/// sign-definite at its minimal index (sigma_classify never throws on it).
/// Element preservation is independently checkable via permutation and
/// Burau-matrix equality.
BraidWord handle_reduce(const BraidWord& w, const ReduceOptions& options = {});

/// Sign class of a handle-free (or empty) word. Throws unreduced_word if
/// the minimal-index letters carry both signs, i.e. the caller passed a
/// word that is not handle-free.
SigmaClass sigma_classify(const BraidWord& w);

/// Dehornoy ordering: handle-reduces a^-1 b. Empty -> Equal,
/// sigma-positive -> Less (a <_D b), sigma-negative -> Greater.
OrderResult compare(const BraidWord& a, const BraidWord& b, const ReduceOptions& options = {});

/// Word problem: true iff handle_reduce(w) is empty.
bool is_trivial(const BraidWord& w, const ReduceOptions& options = {});

/// Dehornoy floor by linear scan m = 0, 1, 2, ... with explicit
/// Delta^(2m+2) words; capped at length(w) + 1, far above the floor of any
/// input (the floor is bounded by the word's sigma_1 letter count).
FloorResult dehornoy_floor(const BraidWord& w, const ReduceOptions& options = {});

}  // namespace braidfloor

#include "braidfloor/sampling.hpp"

#include "braidfloor/errors.hpp"

namespace braidfloor {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw invalid_braid("bound must be positive");
    return next() % bound;
}

long SplitMix64::range(long lo, long hi) {
    if (lo > hi) throw invalid_braid("empty range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return mix(mix(seed + 0x9E3779B97F4A7C15ULL * (tag + 1)) + index);
}

BraidWord random_braid(int n, int max_len, std::uint64_t seed) {
    if (n < 2) throw invalid_braid("braid must have at least 2 strands");
    if (max_len < 0) throw invalid_braid("max_len must be non-negative");
    SplitMix64 rng(seed);
    const long len = rng.range(0, max_len);
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (long i = 0; i < len; ++i) {
        const int index = static_cast<int>(rng.range(1, n - 1));
        const int sign = rng.below(2) == 0 ? 1 : -1;
        letters.push_back({index, sign});
    }
    return {n, std::move(letters)};
}

BraidWord random_band_product(int n, int m, std::uint64_t seed) {
    if (n < 2) throw invalid_braid("braid must have at least 2 strands");
    if (m < 0) throw invalid_braid("band count must be non-negative");
    SplitMix64 rng(seed);
    BraidWord out(n);
    for (int k = 0; k < m; ++k) {
        const int i = static_cast<int>(rng.range(1, n - 1));
        const int j = static_cast<int>(rng.range(i + 1, n));
        out = concat(out, band_generator(n, i, j));
    }
    return out;
}

BraidWord random_knot_braid(int n, int max_len, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
        BraidWord w = random_braid(n, max_len, derive_seed(seed, 0x6b6e6f74, attempt));
        if (closure_components(w) == 1) return w;
    }
    throw internal_error("could not sample a knot-closure word; max_len too small for n");
}

namespace {

CampaignOutcome run_campaign(const CampaignConfig& config, std::uint64_t tag, bool bands) {
    CampaignOutcome outcome;
    outcome.total = config.trials;
    outcome.records.reserve(static_cast<std::size_t>(config.trials));
    const ReduceOptions options{config.step_limit};
    for (long i = 0; i < config.trials; ++i) {
        const std::uint64_t sample_seed = derive_seed(config.seed, tag, static_cast<std::uint64_t>(i));
        SplitMix64 rng(sample_seed);
        const int n = static_cast<int>(rng.range(2, config.max_strands));
        BraidWord w = bands
            ? random_band_product(n, static_cast<int>(rng.range(1, config.max_len)), rng.next())
            : random_braid(n, config.max_len, rng.next());
        CampaignRecord record{i, verify_braid(w, options)};
        if (record.report.all_hold())
            ++outcome.passed;
        else
            outcome.failing.push_back(static_cast<long>(outcome.records.size()));
        outcome.records.push_back(std::move(record));
    }
    return outcome;
}

}  // namespace

CampaignOutcome run_braid_campaign(const CampaignConfig& config) {
    return run_campaign(config, 1, false);
}

CampaignOutcome run_band_campaign(const CampaignConfig& config) {
    return run_campaign(config, 2, true);
}

}  // namespace braidfloor

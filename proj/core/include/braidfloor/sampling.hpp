#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidfloor/bounds.hpp"
#include "braidfloor/braid.hpp"

namespace braidfloor {

/// splitmix64: deterministic across platforms, unlike the standard library
/// distributions. Every sampler derives a private stream from (seed, tag,
/// sample index), so campaigns are reproducible sample by sample no matter
/// how they are scheduled.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform value in [lo, hi].
    long range(long lo, long hi);

private:
    std::uint64_t state_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

/// Uniformly random word: length in [0, max_len], letters uniform over
/// generator index and sign. Deterministic for a given seed.
BraidWord random_braid(int n, int max_len, std::uint64_t seed);

/// Product of m uniformly chosen positive band generators a_{i,j}.
BraidWord random_band_product(int n, int m, std::uint64_t seed);

/// Rejection-samples random_braid until the closure is a knot.
BraidWord random_knot_braid(int n, int max_len, std::uint64_t seed);

struct CampaignConfig {
    std::uint64_t seed = 0;
    long trials = 1000;
    int max_strands = 5;
    int max_len = 20;          ///< word length bound; band count bound for band campaigns
    std::uint64_t step_limit = 10'000'000;
};

struct CampaignRecord {
    long sample_index = 0;
    VerificationReport report;
};

struct CampaignOutcome {
    long total = 0;
    long passed = 0;
    std::vector<CampaignRecord> records;   ///< every sample, ordered by index
    std::vector<long> failing;             ///< indices into records

    bool all_passed() const { return passed == total; }
};

/// Runs verify_braid over `trials` random words with n in [2, max_strands]
/// and length in [0, max_len]. Pure given (config); results are ordered by
/// sample index.
CampaignOutcome run_braid_campaign(const CampaignConfig& config);

/// Same, over positive band products with n in [2, max_strands] and band
/// count in [1, max_len]. Zero bands is excluded: the floor bound
/// floor < m/n is vacuously false at m = 0.
CampaignOutcome run_band_campaign(const CampaignConfig& config);

}  // namespace braidfloor

#include <doctest.h>

#include "braidfloor/sampling.hpp"

using namespace braidfloor;

TEST_CASE("samplers are deterministic in the seed") {
    CHECK(random_braid(4, 20, 123) == random_braid(4, 20, 123));
    CHECK(random_band_product(5, 8, 99) == random_band_product(5, 8, 99));
    CHECK(random_braid(4, 20, 1) != random_braid(4, 20, 2));
}

TEST_CASE("random_braid respects its bounds") {
    CHECK(random_braid(3, 0, 7).empty());
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const BraidWord w = random_braid(5, 12, seed);
        CHECK(w.strands() == 5);
        CHECK(w.length() <= 12);  // letters validated by the constructor
    }
}

TEST_CASE("random_band_product is a positive band product") {
    CHECK(random_band_product(4, 0, 5).empty());
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int m = static_cast<int>(seed % 15);
        const BraidWord w = random_band_product(6, m, seed);
        // each band generator contributes exponent sum exactly +1
        CHECK(exponent_sum(w) == m);
    }
}

TEST_CASE("random_knot_braid closes to a knot") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const BraidWord w = random_knot_braid(2 + static_cast<int>(seed % 4), 16, seed);
        CHECK(closure_components(w) == 1);
    }
}

TEST_CASE("campaigns pass and are reproducible") {
    CampaignConfig config;
    config.seed = 42;
    config.trials = 60;
    config.max_strands = 5;
    config.max_len = 16;

    const CampaignOutcome braids = run_braid_campaign(config);
    CHECK(braids.total == 60);
    CHECK(braids.all_passed());
    CHECK(braids.records.size() == 60);
    for (std::size_t i = 0; i < braids.records.size(); ++i)
        CHECK(braids.records[i].sample_index == static_cast<long>(i));

    const CampaignOutcome bands = run_band_campaign(config);
    CHECK(bands.all_passed());
    for (const CampaignRecord& record : bands.records)
        CHECK(exponent_sum(record.report.braid) >= 1);  // never an empty product

    const CampaignOutcome again = run_braid_campaign(config);
    REQUIRE(again.records.size() == braids.records.size());
    for (std::size_t i = 0; i < braids.records.size(); ++i) {
        CHECK(again.records[i].report.braid == braids.records[i].report.braid);
        CHECK(again.records[i].report.floor == braids.records[i].report.floor);
    }

    config.trials = 0;
    const CampaignOutcome empty = run_braid_campaign(config);
    CHECK(empty.total == 0);
    CHECK(empty.all_passed());
    CHECK(empty.records.empty());
}

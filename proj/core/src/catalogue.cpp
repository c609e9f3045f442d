#include "braidfloor/catalogue.hpp"

#include "braidfloor/burau.hpp"
#include "braidfloor/errors.hpp"

namespace braidfloor {

namespace {

CatalogueEntry certified(std::string name, BraidWord braid, long genus) {
    const long lower = alexander_genus_lower(braid);
    const long upper = bennequin_genus_upper(braid);
    if (lower != upper || lower != genus)
        throw internal_error("catalogue entry '" + name + "' failed certification: alexander " +
                             std::to_string(lower) + ", bennequin " + std::to_string(upper) +
                             ", stored " + std::to_string(genus));
    return {std::move(name), std::move(braid),
            genus, "alexander-span == bennequin-surface == " + std::to_string(genus)};
}

BraidWord repeat(int n, std::vector<Letter> block, int times) {
    std::vector<Letter> letters;
    letters.reserve(block.size() * static_cast<std::size_t>(times));
    for (int r = 0; r < times; ++r) letters.insert(letters.end(), block.begin(), block.end());
    return {n, std::move(letters)};
}

}  // namespace

std::vector<CatalogueEntry> catalogue() {
    std::vector<CatalogueEntry> entries;
    entries.push_back(certified("unknot", BraidWord(2, {{1, 1}}), 0));
    entries.push_back(certified("trefoil", repeat(2, {{1, 1}}, 3), 1));
    entries.push_back(certified("figure-eight", BraidWord(3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}}), 1));
    entries.push_back(certified("T(2,5)", repeat(2, {{1, 1}}, 5), 2));
    entries.push_back(certified("T(2,7)", repeat(2, {{1, 1}}, 7), 3));
    entries.push_back(certified("T(3,4)", repeat(3, {{1, 1}, {2, 1}}, 4), 3));
    return entries;
}

}  // namespace braidfloor

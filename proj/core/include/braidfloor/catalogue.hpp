#pragma once

#include <string>
#include <vector>

#include "braidfloor/braid.hpp"

namespace braidfloor {

/// A named knot with a braid representative and a certified exact genus.
/// No hand-entered ground truth enters the trust base: a stored genus is
/// accepted only when the Alexander lower bound and the Bennequin upper
/// bound coincide on the entry's word, making the value self-certifying.
struct CatalogueEntry {
    std::string name;
    BraidWord braid;
    long exact_genus = 0;
    std::string certification;
};

/// Built-in entries (unknot, trefoil, figure-eight, T(2,5), T(2,7),
/// T(3,4)), re-certified on every call; a certification failure throws
/// internal_error and aborts the load.
std::vector<CatalogueEntry> catalogue();

}  // namespace braidfloor

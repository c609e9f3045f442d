#pragma once

#include <string>
#include <string_view>

#include "braidfloor/braid.hpp"

namespace braidfloor {

/// Parses the braid word grammar `B<n>: <g1> <g2> ... <gk>` where each g is
/// a nonzero integer, g = i meaning sigma_i and g = -i meaning sigma_i^-1.
/// `B2: 1 1 1` is the trefoil braid; the letter list may be empty (`B3:`).
/// Throws parse_error (with byte position) on malformed text, n < 2, zero
/// entries, or |g| >= n.
BraidWord parse_braid(std::string_view text);

/// Renders a word back into the grammar, e.g. `B3: 1 -2` or `B3:`.
std::string to_grammar(const BraidWord& w);

/// Human-readable generator string, e.g. `sigma_1 sigma_2^-1`; the empty
/// word renders as `1`.
std::string to_sigma_string(const BraidWord& w);

}  // namespace braidfloor

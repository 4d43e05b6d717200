#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "snprnet/network.hpp"

namespace snprnet::detail {

// Single-quotes a taxon name when it contains characters that are not allowed
// unquoted; embedded quotes are doubled.
std::string quote_label(std::string_view label);

// eNewick text of net, terminated by ';'. Children are visited in ascending
// `rank` order when given, in slot order otherwise. A reticulation's subtree is
// written at its first occurrence; tags are numbered #H1, #H2, ... in order of
// first occurrence.
std::string write_newick(const PhyloNetwork& net, const std::vector<std::uint32_t>* rank);

}  // namespace snprnet::detail

#pragma once

// Extended Newick input and output, and Graphviz DOT export.
//
// One network per line, terminated by ';'. The top-level node is the child of
// the pendant root, which is implicit in the text. A reticulation is written as
// a hybrid tag '#' [letters] digits (e.g. #H1) that occurs exactly twice; one
// occurrence carries the reticulation's child, as in "(b)#H1", the other is the
// bare tag. A tagged leaf "b#H1" is read as a reticulation whose child is the
// leaf b. Internal node labels are accepted and ignored. Branch lengths,
// comments and other annotations are rejected.

#include <string>
#include <string_view>
#include <vector>

#include "snprnet/network.hpp"

namespace snprnet {

// Parses exactly one network (surrounding whitespace allowed). Throws
// ParseError with SyntaxError or TagArityError, or with the netcore validation
// code when the text is well formed but does not describe a valid network.
PhyloNetwork parse_enewick(std::string_view text);

// Parses a newline-separated document. Blank lines are skipped; reported line
// numbers refer to the whole document.
std::vector<PhyloNetwork> parse_enewick_document(std::string_view text);

// Canonical mode writes the canonical key (tree-child networks only; throws
// NotTreeChild). Otherwise children are written in construction order.
std::string write_enewick(const PhyloNetwork& net, bool canonical);

// Directed DOT graph; vertices in id order, reticulations drawn as diamonds,
// leaves labelled with their taxon.
std::string write_dot(const PhyloNetwork& net);

}  // namespace snprnet

#pragma once

#include <string>
#include <vector>

namespace magicsq {

// One line per divergence between the source tables this toolkit
// mechanizes and what exact computation produces.  Every resolution quoted
// here is verified by the test suite; the list is deterministic and is
// what `report --discrepancies` prints.
const std::vector<std::string>& discrepancy_notes();

}  // namespace magicsq

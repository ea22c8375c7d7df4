#include "fixtures.hpp"

namespace sblf::fixtures {

const std::string_view kCombChart =
    "# degree-12 vertex with a boundary comb on each side\n"
    "vertex 1 interior-12\n"
    "vertex 2 interior-1\n"
    "vertex 101 boundary\n"
    "vertex 102 boundary\n"
    "vertex 103 boundary\n"
    "vertex 104 boundary\n"
    "vertex 105 boundary\n"
    "vertex 106 boundary\n"
    "vertex 107 boundary\n"
    "vertex 108 boundary\n"
    "vertex 109 boundary\n"
    "vertex 110 boundary\n"
    "vertex 111 boundary\n"
    "vertex 112 boundary\n"
    "vertex 113 boundary\n"
    "vertex 114 boundary\n"
    "vertex 115 boundary\n"
    "edge 1 101 1 1\n"
    "edge 2 102 1 2\n"
    "edge 3 103 1 1\n"
    "edge 4 104 1 2\n"
    "edge 5 105 1 1\n"
    "edge 6 106 1 2\n"
    "edge 7 107 1 1\n"
    "edge 8 108 1 2\n"
    "edge 9 109 1 1\n"
    "edge 10 110 1 2\n"
    "edge 11 111 1 1\n"
    "edge 12 112 1 2\n"
    "edge 13 113 2 1\n"
    "edge 14 114 115 1\n"
    "hoop 15 2\n"
    "rot 1 1 2 3 4 5 6 7 8 9 10 11 12\n"
    "boundary 101 102 103 104 105 106 107 108 109 110 111 112 113 114 115\n";

const std::string_view kHexagonPairChart =
    "# u has edges 1-3 inward and 4-6 outward; v sees them the other way round\n"
    "vertex 1 interior-6\n"
    "vertex 2 interior-6\n"
    "edge 1 2 1 1\n"
    "edge 2 2 1 2\n"
    "edge 3 2 1 1\n"
    "edge 4 1 2 2\n"
    "edge 5 1 2 1\n"
    "edge 6 1 2 2\n"
    "rot 1 1 2 3 4 5 6\n"
    "rot 2 4 5 6 1 2 3\n";

const std::string_view kDegreeFiveChart =
    "vertex 1 interior\n"
    "vertex 2 interior-1\n"
    "vertex 3 interior-1\n"
    "vertex 4 interior-1\n"
    "vertex 5 interior-1\n"
    "vertex 6 interior-1\n"
    "edge 1 1 2 2\n"
    "edge 2 1 3 1\n"
    "edge 3 1 4 2\n"
    "edge 4 1 5 1\n"
    "edge 5 1 6 2\n";

const std::string_view kOutwardLeafChart =
    "vertex 1 interior-1\n"
    "vertex 2 boundary\n"
    "edge 1 1 2 1\n"
    "boundary 2\n";

const std::string_view kBadBoundaryChart =
    "vertex 1 interior-1\n"
    "vertex 2 boundary\n"
    "edge 1 2 1 2\n"
    "boundary 2\n";

const std::string_view kExampleBoundarySequence =
    "(1,-1),(1,-1),(1,-1),(1,-1),(2,+1),(1,+1),(2,+1),(1,+1),(2,+1),(1,+1)";

}  // namespace sblf::fixtures

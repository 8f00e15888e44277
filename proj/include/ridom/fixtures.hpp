#pragma once

#include "ridom/graph.hpp"
#include "ridom/labeling.hpp"

namespace ridom {

// Hard-coded instances used by the verification harness and tests.

// Seven vertices: tops 0..2 all joined to bottoms 3..6, plus the edge 0-1.
// Separates the two rainbow independent domination variants at k = 3.
Graph incomparability_graph();

// Twelve vertices: tops 0..5, bottoms 6..11; top pair {2i,2i+1} joined to
// every bottom vertex outside pair {6+2i,7+2i}.
Graph spoke_pairs_graph();
// Labeling with tops 0,1 and bottoms 6,7 carrying colors 1,2,1,2.
RikLabeling spoke_pairs_labeling();

// Nine vertices: hubs 0 and 5 joined to 1..4, hubs 8 and 5 joined to 6,7.
Graph double_spider_graph();
// Labeling with hubs 0,8 on color 1 and hub 5 on color 2.
RikLabeling double_spider_labeling();

Graph petersen_graph();

}  // namespace ridom

#pragma once

#include <vector>

#include "regspec/graph.hpp"

namespace regspec::fixtures {

inline RegularGraph k4() {
    return RegularGraph(4, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline RegularGraph k33() {
    return RegularGraph(6, 3,
                        {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Outer 5-ring 0..4, spokes to 5..9, inner pentagram.
inline RegularGraph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        es.emplace_back(i, i + 5);
        const int a = i + 5, b = 5 + (i + 2) % 5;
        es.emplace_back(std::min(a, b), std::max(a, b));
    }
    return RegularGraph(10, 3, es);
}

inline RegularGraph prism() {
    return RegularGraph(6, 3, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// 2-regular 5-ring: one cycle, nothing else.
inline RegularGraph ring5() {
    return RegularGraph(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

// Cubic graph on 8 vertices with exactly one triangle (0,1,2).
inline RegularGraph cubic8() {
    return RegularGraph(8, 3,
                        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 6}, {3, 7},
                         {4, 6}, {4, 7}, {5, 6}, {5, 7}});
}

// Cubic graph on 14 vertices holding two vertex-disjoint triangles joined by
// the single edge (0,3): the smallest configuration where divisor-sum walk
// counts deviate from true walk counts without any vertex-sharing cycles.
inline RegularGraph two_triangle_bridge() {
    return RegularGraph(14, 3,
                        {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 6},
                         {2, 10}, {4, 8}, {5, 12}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11},
                         {11, 12}, {12, 13}, {13, 6}, {7, 11}, {9, 13}});
}

}  // namespace regspec::fixtures

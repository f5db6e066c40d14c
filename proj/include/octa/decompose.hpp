#pragma once

#include <string>
#include <vector>

#include "octa/octahedral.hpp"

namespace octa {

// The tuple built from the lowest-index covered class: its minimum-degree
// vertex x1 selects the umbrella family U, W is their (disjoint) union,
// and part j collects the edges of omega ^ W incident with x_j.
struct SuitableDecomposition {
    int i1 = 0;                          // smallest covered class index
    std::vector<int> vertex_order;       // vertices of class i1 by (degree, index)
    std::vector<Umbrella> umbrellas;     // U: colour-i1 umbrellas through x1's edges
    std::vector<OctahedralSystem> parts; // parts[j-2] = edges of omega ^ W at x_j, j in [2..n]
    OctahedralSystem w;                  // symmetric difference over U
};

// Requires a nonempty system with every class size equal to n.
SuitableDecomposition suitable_decomposition(const OctahedralSystem& os);

// Checks the five structural facts a suitable decomposition satisfies:
//  (i)   parts are pairwise edge-disjoint
//  (ii)  omega = W ^ part_2 ^ ... ^ part_n
//  (iii) every part is octahedral
//  (iv)  deg(x_j) >= max(|U|, |part_j| - |part_j n W|)
//  (v)   classes uncovered in omega stay uncovered in omega ^ W and in every part
// Returns true and leaves `why` untouched on success.
bool verify_suitable_decomposition(const OctahedralSystem& os, const SuitableDecomposition& sd,
                                   std::string* why = nullptr);

// Expresses the system as a symmetric difference of umbrellas whose
// colours are all covered, by peeling suitable decompositions until the
// system is empty. Requires every class size equal to n.
std::vector<Umbrella> umbrella_decomposition(const OctahedralSystem& os);

// Symmetric difference of the expansions of `umbrellas` over the given shape.
OctahedralSystem recompose_umbrellas(const std::vector<Umbrella>& umbrellas, int n,
                                     const std::vector<int>& class_sizes);

}  // namespace octa

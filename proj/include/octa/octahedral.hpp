#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octa {

// Vertices live in 1-based classes; an edge picks one vertex per class.
struct VertexId {
    int class_index = 0;   // in [1..n]
    int vertex_index = 0;  // in [1..|V_class|]

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

using Edge = std::vector<int>;  // n components, 1-based vertex indices

// A 2-subset per class; the combinatorial boxes of the parity condition.
struct Box {
    std::vector<std::pair<int, int>> pairs;  // (a, b) with a < b, one per class

    std::string to_string() const;
};

// A set of edges over n disjoint classes, canonically sorted and
// duplicate-free. The parity condition (every box meets the edge set in
// an even number of edges) is the defining invariant of the octahedral
// systems this type is meant to carry; it is checked by is_octahedral,
// not enforced on construction.
class OctahedralSystem {
public:
    OctahedralSystem() = default;
    OctahedralSystem(int n, std::vector<int> class_sizes, std::vector<Edge> edges);

    static OctahedralSystem empty_system(int n, std::vector<int> class_sizes);

    int n() const { return n_; }
    const std::vector<int>& class_sizes() const { return class_sizes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(const Edge& e) const;
    bool same_shape(const OctahedralSystem& other) const;

    // Edges whose class-i component is vertex x.
    std::vector<Edge> incident_edges(int class_index, int vertex_index) const;
    int degree(int class_index, int vertex_index) const;

    friend bool operator==(const OctahedralSystem&, const OctahedralSystem&) = default;

private:
    int n_ = 0;
    std::vector<int> class_sizes_;
    std::vector<Edge> edges_;  // sorted lexicographically
};

// The elementary octahedral system: one varying class, everything else
// pinned by the transversal.
struct Umbrella {
    int colour = 0;                // class whose vertices all appear
    std::vector<int> transversal;  // vertex per class != colour, ascending class order

    friend auto operator<=>(const Umbrella&, const Umbrella&) = default;
};

OctahedralSystem expand_umbrella(const Umbrella& u, int n, const std::vector<int>& class_sizes);

struct CoverageReport {
    std::vector<int> covered;                // ascending class indices
    std::vector<VertexId> isolated;          // ascending
    std::vector<std::vector<int>> degrees;   // degrees[c-1][v-1]

    bool is_covered(int class_index) const;
    int degree(const VertexId& v) const { return degrees[v.class_index - 1][v.vertex_index - 1]; }
    int covered_count() const { return static_cast<int>(covered.size()); }
};

CoverageReport coverage(const OctahedralSystem& os);

// First box (lexicographically smallest for the enumeration route) meeting
// the edge set an odd number of times; nullopt when the parity condition
// holds. Small shapes enumerate boxes directly; larger ones run the
// equivalent difference-tensor check, whose witness is an adjacent box.
std::optional<Box> parity_violation(const OctahedralSystem& os);

// The two routes behind parity_violation, exposed for cross-validation.
std::optional<Box> parity_violation_by_boxes(const OctahedralSystem& os);
std::optional<Box> parity_violation_by_difference(const OctahedralSystem& os);

bool is_octahedral(const OctahedralSystem& os);
bool is_octahedral(int n, const std::vector<int>& class_sizes, const std::vector<Edge>& edges);

OctahedralSystem symmetric_difference(const OctahedralSystem& a, const OctahedralSystem& b);

// k(n-2)+2, the cardinality floor for an octahedral system with equal
// class sizes n and k covered classes.
long long cardinality_lower_bound(int n, int k);

// True iff the system is empty or meets the cardinality floor for its
// covered-class count. Requires all class sizes equal to n.
bool verify_bound(const OctahedralSystem& os);

}  // namespace octa

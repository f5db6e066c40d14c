#include "octa/octahedral.hpp"

#include <algorithm>
#include <unordered_map>

#include "octa/errors.hpp"

namespace octa {

namespace {

constexpr std::uint64_t kBoxWorkBudget = 20'000'000;   // edges * boxes-per-edge
constexpr std::uint64_t kTensorCellBudget = 1 << 20;   // cells in the difference tensor

void validate_shape(int n, const std::vector<int>& class_sizes) {
    if (n < 1) throw input_error("class count must be at least 1, got " + std::to_string(n));
    if (static_cast<int>(class_sizes.size()) != n)
        throw input_error("expected " + std::to_string(n) + " class sizes, got " +
                          std::to_string(class_sizes.size()));
    for (int i = 0; i < n; ++i)
        if (class_sizes[i] < 2)
            throw input_error("class " + std::to_string(i + 1) + " has size " +
                              std::to_string(class_sizes[i]) + "; classes need at least 2 vertices");
}

void validate_edge(const Edge& e, int n, const std::vector<int>& class_sizes) {
    if (static_cast<int>(e.size()) != n)
        throw input_error("edge has " + std::to_string(e.size()) + " components, expected " +
                          std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (e[i] < 1 || e[i] > class_sizes[i])
            throw input_error("edge component " + std::to_string(i + 1) + " is " +
                              std::to_string(e[i]) + ", outside [1.." +
                              std::to_string(class_sizes[i]) + "]");
}

}  // namespace

std::string Box::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += " ";
        out += "X" + std::to_string(i + 1) + "={" + std::to_string(pairs[i].first) + "," +
               std::to_string(pairs[i].second) + "}";
    }
    return out;
}

OctahedralSystem::OctahedralSystem(int n, std::vector<int> class_sizes, std::vector<Edge> edges)
    : n_(n), class_sizes_(std::move(class_sizes)), edges_(std::move(edges)) {
    validate_shape(n_, class_sizes_);
    for (const Edge& e : edges_) validate_edge(e, n_, class_sizes_);
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw input_error("duplicate edge in octahedral system");
}

OctahedralSystem OctahedralSystem::empty_system(int n, std::vector<int> class_sizes) {
    return OctahedralSystem(n, std::move(class_sizes), {});
}

bool OctahedralSystem::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool OctahedralSystem::same_shape(const OctahedralSystem& other) const {
    return n_ == other.n_ && class_sizes_ == other.class_sizes_;
}

std::vector<Edge> OctahedralSystem::incident_edges(int class_index, int vertex_index) const {
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (e[class_index - 1] == vertex_index) out.push_back(e);
    return out;
}

int OctahedralSystem::degree(int class_index, int vertex_index) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e[class_index - 1] == vertex_index) ++d;
    return d;
}

OctahedralSystem expand_umbrella(const Umbrella& u, int n, const std::vector<int>& class_sizes) {
    validate_shape(n, class_sizes);
    if (u.colour < 1 || u.colour > n)
        throw input_error("umbrella colour " + std::to_string(u.colour) + " outside [1.." +
                          std::to_string(n) + "]");
    if (static_cast<int>(u.transversal.size()) != n - 1)
        throw input_error("umbrella transversal has " + std::to_string(u.transversal.size()) +
                          " components, expected " + std::to_string(n - 1));
    Edge base(n, 0);
    int t = 0;
    for (int c = 1; c <= n; ++c) {
        if (c == u.colour) continue;
        const int v = u.transversal[t++];
        if (v < 1 || v > class_sizes[c - 1])
            throw input_error("umbrella transversal component for class " + std::to_string(c) +
                              " is " + std::to_string(v) + ", outside [1.." +
                              std::to_string(class_sizes[c - 1]) + "]");
        base[c - 1] = v;
    }
    std::vector<Edge> edges;
    edges.reserve(class_sizes[u.colour - 1]);
    for (int v = 1; v <= class_sizes[u.colour - 1]; ++v) {
        base[u.colour - 1] = v;
        edges.push_back(base);
    }
    return OctahedralSystem(n, class_sizes, std::move(edges));
}

CoverageReport coverage(const OctahedralSystem& os) {
    CoverageReport report;
    report.degrees.resize(os.n());
    for (int c = 0; c < os.n(); ++c) report.degrees[c].assign(os.class_sizes()[c], 0);
    for (const Edge& e : os.edges())
        for (int c = 0; c < os.n(); ++c) ++report.degrees[c][e[c] - 1];
    for (int c = 0; c < os.n(); ++c) {
        bool all_touched = true;
        for (int v = 0; v < os.class_sizes()[c]; ++v) {
            if (report.degrees[c][v] == 0) {
                report.isolated.push_back(VertexId{c + 1, v + 1});
                all_touched = false;
            }
        }
        if (all_touched) report.covered.push_back(c + 1);
    }
    return report;
}

bool CoverageReport::is_covered(int class_index) const {
    return std::binary_search(covered.begin(), covered.end(), class_index);
}

namespace {

// Box enumeration route. Only boxes meeting at least one edge can have an
// odd count, so it suffices to tally, for every edge, the boxes containing
// it. Box keys are mixed-radix with class 1 most significant, making the
// numeric minimum the lexicographically smallest violating box.
std::optional<Box> boxes_route(const OctahedralSystem& os) {
    const int n = os.n();
    const std::vector<int>& sizes = os.class_sizes();

    std::vector<std::uint64_t> stride(n);
    std::uint64_t radix_ok = 1;
    {
        std::uint64_t acc = 1;
        for (int c = n - 1; c >= 0; --c) {
            stride[c] = acc;
            const std::uint64_t digits = static_cast<std::uint64_t>(sizes[c]) * sizes[c];
            if (acc > UINT64_MAX / digits) {
                radix_ok = 0;
                break;
            }
            acc *= digits;
        }
        if (!radix_ok)
            throw resource_error("box keys overflow 64 bits for this shape");
    }

    std::unordered_map<std::uint64_t, std::uint32_t> counts;
    std::vector<int> partner(n);

    for (const Edge& e : os.edges()) {
        // Odometer over partner vertices, one per class.
        for (int c = 0; c < n; ++c) partner[c] = e[c] == 1 ? 2 : 1;
        for (;;) {
            std::uint64_t key = 0;
            for (int c = 0; c < n; ++c) {
                const int a = std::min(e[c], partner[c]);
                const int b = std::max(e[c], partner[c]);
                key += stride[c] * (static_cast<std::uint64_t>(a - 1) * sizes[c] + (b - 1));
            }
            ++counts[key];
            int c = n - 1;
            for (; c >= 0; --c) {
                do {
                    ++partner[c];
                } while (partner[c] == e[c]);
                if (partner[c] <= sizes[c]) break;
                partner[c] = e[c] == 1 ? 2 : 1;
            }
            if (c < 0) break;
        }
    }

    std::optional<std::uint64_t> worst;
    for (const auto& [key, count] : counts)
        if (count % 2 != 0 && (!worst || key < *worst)) worst = key;
    if (!worst) return std::nullopt;

    Box box;
    box.pairs.resize(n);
    std::uint64_t rest = *worst;
    for (int c = 0; c < n; ++c) {
        const std::uint64_t digit = rest / stride[c];
        rest %= stride[c];
        box.pairs[c] = {static_cast<int>(digit / sizes[c]) + 1,
                        static_cast<int>(digit % sizes[c]) + 1};
    }
    return box;
}

// Difference-tensor route. The parity condition says the indicator tensor
// is orthogonal to every product of even-weight vectors, and the adjacent
// differences e_t + e_{t+1} span each class's even-weight space. Applying
// the adjacent-difference operator along every axis therefore yields zero
// exactly for octahedral systems, and any surviving cell names an odd
// adjacent box.
std::optional<Box> difference_route(const OctahedralSystem& os) {
    const int n = os.n();
    const std::vector<int>& sizes = os.class_sizes();

    std::uint64_t cells = 1;
    for (int c = 0; c < n; ++c) {
        cells *= static_cast<std::uint64_t>(sizes[c]);
        if (cells > kTensorCellBudget)
            throw resource_error("edge space exceeds the parity-check cell budget (2^20)");
    }

    std::vector<int> dims(sizes.begin(), sizes.end());
    std::vector<std::uint8_t> tensor(cells, 0);
    {
        std::vector<std::uint64_t> stride(n);
        std::uint64_t acc = 1;
        for (int c = n - 1; c >= 0; --c) {
            stride[c] = acc;
            acc *= static_cast<std::uint64_t>(sizes[c]);
        }
        for (const Edge& e : os.edges()) {
            std::uint64_t idx = 0;
            for (int c = 0; c < n; ++c) idx += stride[c] * static_cast<std::uint64_t>(e[c] - 1);
            tensor[idx] ^= 1;
        }
    }

    for (int axis = 0; axis < n; ++axis) {
        std::vector<std::uint64_t> stride(n);
        std::uint64_t acc = 1;
        for (int c = n - 1; c >= 0; --c) {
            stride[c] = acc;
            acc *= static_cast<std::uint64_t>(dims[c]);
        }
        std::vector<int> out_dims = dims;
        out_dims[axis] -= 1;
        std::uint64_t out_cells = 1;
        for (int c = 0; c < n; ++c) out_cells *= static_cast<std::uint64_t>(out_dims[c]);

        std::vector<std::uint8_t> next(out_cells, 0);
        std::vector<int> coord(n, 0);
        for (std::uint64_t o = 0; o < out_cells; ++o) {
            std::uint64_t in_idx = 0;
            for (int c = 0; c < n; ++c) in_idx += stride[c] * static_cast<std::uint64_t>(coord[c]);
            next[o] = tensor[in_idx] ^ tensor[in_idx + stride[axis]];
            for (int c = n - 1; c >= 0; --c) {
                if (++coord[c] < out_dims[c]) break;
                coord[c] = 0;
            }
        }
        tensor = std::move(next);
        dims = std::move(out_dims);
    }

    for (std::uint64_t i = 0; i < tensor.size(); ++i) {
        if (!tensor[i]) continue;
        Box box;
        box.pairs.resize(n);
        std::uint64_t rest = i;
        for (int c = n - 1; c >= 0; --c) {
            const int t = static_cast<int>(rest % static_cast<std::uint64_t>(dims[c]));
            rest /= static_cast<std::uint64_t>(dims[c]);
            box.pairs[c] = {t + 1, t + 2};
        }
        return box;
    }
    return std::nullopt;
}

std::uint64_t boxes_route_work(const OctahedralSystem& os) {
    std::uint64_t per_edge = 1;
    for (int s : os.class_sizes()) {
        per_edge *= static_cast<std::uint64_t>(s - 1);
        if (per_edge > kBoxWorkBudget) return UINT64_MAX;
    }
    if (os.size() == 0) return 0;
    if (per_edge > kBoxWorkBudget / os.size()) return UINT64_MAX;
    return per_edge * os.size();
}

}  // namespace

std::optional<Box> parity_violation_by_boxes(const OctahedralSystem& os) {
    if (os.empty()) return std::nullopt;
    return boxes_route(os);
}

std::optional<Box> parity_violation_by_difference(const OctahedralSystem& os) {
    if (os.empty()) return std::nullopt;
    return difference_route(os);
}

std::optional<Box> parity_violation(const OctahedralSystem& os) {
    if (os.empty()) return std::nullopt;
    if (os.n() <= 5 && boxes_route_work(os) <= kBoxWorkBudget) return boxes_route(os);
    return difference_route(os);
}

bool is_octahedral(const OctahedralSystem& os) { return !parity_violation(os).has_value(); }

bool is_octahedral(int n, const std::vector<int>& class_sizes, const std::vector<Edge>& edges) {
    return is_octahedral(OctahedralSystem(n, class_sizes, edges));
}

OctahedralSystem symmetric_difference(const OctahedralSystem& a, const OctahedralSystem& b) {
    if (!a.same_shape(b)) throw input_error("symmetric difference of mismatched shapes");
    std::vector<Edge> merged;
    merged.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.edges().begin(), a.edges().end(), b.edges().begin(),
                                  b.edges().end(), std::back_inserter(merged));
    OctahedralSystem result(a.n(), a.class_sizes(), std::move(merged));
#if defined(OCTA_ENABLE_CHECKS)
    // Stability under symmetric difference, provided the operands are
    // octahedral. Cheap difference-tensor route only, and only at desk
    // scale shapes.
    std::uint64_t cells = 1;
    bool small = true;
    for (int s : result.class_sizes()) {
        cells *= static_cast<std::uint64_t>(s);
        if (cells > kTensorCellBudget) {
            small = false;
            break;
        }
    }
    if (small && !parity_violation_by_difference(a) && !parity_violation_by_difference(b))
        OCTA_CHECK(!parity_violation_by_difference(result).has_value(),
                   "symmetric difference of octahedral systems lost parity");
#endif
    return result;
}

long long cardinality_lower_bound(int n, int k) {
    if (n < 2) throw input_error("cardinality bound needs n >= 2, got " + std::to_string(n));
    if (k < 1) throw input_error("cardinality bound needs k >= 1, got " + std::to_string(k));
    return static_cast<long long>(k) * (n - 2) + 2;
}

bool verify_bound(const OctahedralSystem& os) {
    for (int s : os.class_sizes())
        if (s != os.n())
            throw input_error("cardinality bound applies to class sizes equal to n");
    if (os.empty()) return true;
    const int k = coverage(os).covered_count();
    if (k == 0) return false;  // nonempty with no covered class cannot be octahedral
    return static_cast<long long>(os.size()) >= cardinality_lower_bound(os.n(), k);
}

}  // namespace octa

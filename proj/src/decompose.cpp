#include "octa/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "octa/errors.hpp"

namespace octa {

namespace {

void require_square(const OctahedralSystem& os, const char* op) {
    for (int s : os.class_sizes())
        if (s != os.n())
            throw input_error(std::string(op) + " requires every class size equal to n=" +
                              std::to_string(os.n()));
}

}  // namespace

SuitableDecomposition suitable_decomposition(const OctahedralSystem& os) {
    if (os.empty()) throw input_error("suitable decomposition requires a nonempty system");
    require_square(os, "suitable decomposition");

    const int n = os.n();
    const CoverageReport cov = coverage(os);
    if (cov.covered.empty())
        throw internal_error(
            "nonempty system with no covered class; input violates the parity condition");

    SuitableDecomposition sd;
    sd.i1 = cov.covered.front();

    // Vertices of V_{i1} by increasing degree, ties by ascending index.
    sd.vertex_order.resize(n);
    std::iota(sd.vertex_order.begin(), sd.vertex_order.end(), 1);
    const std::vector<int>& degs = cov.degrees[sd.i1 - 1];
    std::stable_sort(sd.vertex_order.begin(), sd.vertex_order.end(),
                     [&](int a, int b) { return degs[a - 1] < degs[b - 1]; });

    const int x1 = sd.vertex_order.front();
    for (const Edge& e : os.incident_edges(sd.i1, x1)) {
        Umbrella u;
        u.colour = sd.i1;
        u.transversal.reserve(n - 1);
        for (int c = 1; c <= n; ++c)
            if (c != sd.i1) u.transversal.push_back(e[c - 1]);
        sd.umbrellas.push_back(u);
    }
    std::sort(sd.umbrellas.begin(), sd.umbrellas.end());
    OCTA_CHECK(static_cast<int>(sd.umbrellas.size()) == degs[x1 - 1],
               "umbrella family size must equal deg(x1)");

    // Umbrellas of one colour with distinct transversals are disjoint, so
    // W is their plain union.
    std::vector<Edge> w_edges;
    w_edges.reserve(sd.umbrellas.size() * n);
    for (const Umbrella& u : sd.umbrellas) {
        const OctahedralSystem expanded = expand_umbrella(u, n, os.class_sizes());
        w_edges.insert(w_edges.end(), expanded.edges().begin(), expanded.edges().end());
    }
    sd.w = OctahedralSystem(n, os.class_sizes(), std::move(w_edges));

    const OctahedralSystem rest = symmetric_difference(os, sd.w);
    OCTA_CHECK(rest.degree(sd.i1, x1) == 0, "x1 must be isolated after removing W");

    sd.parts.reserve(n - 1);
    for (int j = 1; j < n; ++j) {
        const int xj = sd.vertex_order[j];
        std::vector<Edge> part_edges = rest.incident_edges(sd.i1, xj);
        sd.parts.emplace_back(n, os.class_sizes(), std::move(part_edges));
    }
    return sd;
}

namespace {

bool fail(std::string* why, const std::string& message) {
    if (why) *why = message;
    return false;
}

}  // namespace

bool verify_suitable_decomposition(const OctahedralSystem& os, const SuitableDecomposition& sd,
                                   std::string* why) {
    const int n = os.n();
    if (static_cast<int>(sd.parts.size()) != n - 1) return fail(why, "wrong part count");

    // (i) parts pairwise edge-disjoint
    for (std::size_t a = 0; a < sd.parts.size(); ++a)
        for (std::size_t b = a + 1; b < sd.parts.size(); ++b)
            for (const Edge& e : sd.parts[a].edges())
                if (sd.parts[b].contains(e))
                    return fail(why, "(i) parts " + std::to_string(a + 2) + " and " +
                                         std::to_string(b + 2) + " share an edge");

    // (ii) recomposition
    OctahedralSystem acc = sd.w;
    for (const OctahedralSystem& part : sd.parts) acc = symmetric_difference(acc, part);
    if (!(acc == os)) return fail(why, "(ii) W ^ parts does not recompose the system");

    // (iii) each part octahedral
    for (std::size_t j = 0; j < sd.parts.size(); ++j)
        if (!is_octahedral(sd.parts[j]))
            return fail(why, "(iii) part " + std::to_string(j + 2) + " is not octahedral");

    // (iv) degree bounds
    const CoverageReport cov = coverage(os);
    const long long family = static_cast<long long>(sd.umbrellas.size());
    for (int j = 0; j < n; ++j) {
        const int xj = sd.vertex_order[j];
        const long long deg = cov.degrees[sd.i1 - 1][xj - 1];
        if (deg < family)
            return fail(why, "(iv) deg(x" + std::to_string(j + 1) + ") below |U|");
        if (j >= 1) {
            const OctahedralSystem& part = sd.parts[j - 1];
            long long common = 0;
            for (const Edge& e : part.edges())
                if (sd.w.contains(e)) ++common;
            if (deg < static_cast<long long>(part.size()) - common)
                return fail(why, "(iv) deg(x" + std::to_string(j + 1) +
                                     ") below |part| - |part n W|");
        }
    }

    // (v) uncovered classes stay uncovered
    const OctahedralSystem rest = symmetric_difference(os, sd.w);
    const CoverageReport rest_cov = coverage(rest);
    std::vector<CoverageReport> part_covs;
    part_covs.reserve(sd.parts.size());
    for (const OctahedralSystem& part : sd.parts) part_covs.push_back(coverage(part));
    for (int c = 1; c <= n; ++c) {
        if (cov.is_covered(c)) continue;
        if (rest_cov.is_covered(c))
            return fail(why, "(v) class " + std::to_string(c) + " became covered in omega ^ W");
        for (std::size_t j = 0; j < part_covs.size(); ++j)
            if (part_covs[j].is_covered(c))
                return fail(why, "(v) class " + std::to_string(c) + " became covered in part " +
                                     std::to_string(j + 2));
    }
    return true;
}

std::vector<Umbrella> umbrella_decomposition(const OctahedralSystem& os) {
    require_square(os, "umbrella decomposition");
    std::vector<Umbrella> result;
    OctahedralSystem rest = os;
    // Each peel isolates the lowest covered class, so the covered count
    // strictly decreases and an empty system has no covered classes.
    while (!rest.empty()) {
        SuitableDecomposition sd = suitable_decomposition(rest);
        rest = symmetric_difference(rest, sd.w);
        result.insert(result.end(), sd.umbrellas.begin(), sd.umbrellas.end());
    }
    std::sort(result.begin(), result.end());
    OCTA_CHECK(std::adjacent_find(result.begin(), result.end()) == result.end(),
               "umbrella decomposition produced a repeated umbrella");
    return result;
}

OctahedralSystem recompose_umbrellas(const std::vector<Umbrella>& umbrellas, int n,
                                     const std::vector<int>& class_sizes) {
    OctahedralSystem acc = OctahedralSystem::empty_system(n, class_sizes);
    for (const Umbrella& u : umbrellas)
        acc = symmetric_difference(acc, expand_umbrella(u, n, class_sizes));
    return acc;
}

}  // namespace octa

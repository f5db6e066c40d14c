#include "octa/io.hpp"

#include <fstream>
#include <sstream>

#include "octa/errors.hpp"

namespace octa::io {

namespace {

const json& expect_field(const json& doc, const char* name, const std::string& where) {
    auto it = doc.find(name);
    if (it == doc.end()) throw input_error(where + ": missing field '" + name + "'");
    return *it;
}

int expect_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) throw input_error(where + ": expected an integer");
    return value.get<int>();
}

}  // namespace

json system_to_json(const OctahedralSystem& os) {
    json edges = json::array();
    for (const Edge& e : os.edges()) edges.push_back(e);
    return json{{"n", os.n()}, {"class_sizes", os.class_sizes()}, {"edges", std::move(edges)}};
}

OctahedralSystem system_from_json(const json& doc, const std::string& where) {
    const std::string w = where.empty() ? "system" : where;
    if (!doc.is_object()) throw input_error(w + ": expected an object");
    const int n = expect_int(expect_field(doc, "n", w), w + ".n");

    const json& sizes_doc = expect_field(doc, "class_sizes", w);
    if (!sizes_doc.is_array()) throw input_error(w + ".class_sizes: expected an array");
    std::vector<int> sizes;
    for (std::size_t i = 0; i < sizes_doc.size(); ++i)
        sizes.push_back(expect_int(sizes_doc[i], w + ".class_sizes[" + std::to_string(i) + "]"));

    const json& edges_doc = expect_field(doc, "edges", w);
    if (!edges_doc.is_array()) throw input_error(w + ".edges: expected an array");
    std::vector<Edge> edges;
    edges.reserve(edges_doc.size());
    for (std::size_t i = 0; i < edges_doc.size(); ++i) {
        const json& edge_doc = edges_doc[i];
        const std::string ew = w + ".edges[" + std::to_string(i) + "]";
        if (!edge_doc.is_array()) throw input_error(ew + ": expected an array");
        Edge e;
        for (std::size_t c = 0; c < edge_doc.size(); ++c)
            e.push_back(expect_int(edge_doc[c], ew + "[" + std::to_string(c) + "]"));
        edges.push_back(std::move(e));
    }
    return OctahedralSystem(n, std::move(sizes), std::move(edges));
}

json configuration_to_json(const ColourfulConfiguration& config) {
    json colours = json::array();
    for (const auto& colour : config.colours) {
        json points = json::array();
        for (const Point& p : colour) {
            json coords = json::array();
            for (const Rational& c : p) coords.push_back(format_rational(c));
            points.push_back(std::move(coords));
        }
        colours.push_back(std::move(points));
    }
    return json{{"d", config.d}, {"colours", std::move(colours)}};
}

ColourfulConfiguration configuration_from_json(const json& doc, const std::string& where) {
    const std::string w = where.empty() ? "configuration" : where;
    if (!doc.is_object()) throw input_error(w + ": expected an object");

    ColourfulConfiguration config;
    config.d = expect_int(expect_field(doc, "d", w), w + ".d");

    const json& colours_doc = expect_field(doc, "colours", w);
    if (!colours_doc.is_array()) throw input_error(w + ".colours: expected an array");
    for (std::size_t i = 0; i < colours_doc.size(); ++i) {
        const json& colour_doc = colours_doc[i];
        const std::string cw = w + ".colours[" + std::to_string(i) + "]";
        if (!colour_doc.is_array()) throw input_error(cw + ": expected an array");
        std::vector<Point> colour;
        for (std::size_t p = 0; p < colour_doc.size(); ++p) {
            const json& point_doc = colour_doc[p];
            const std::string pw = cw + "[" + std::to_string(p) + "]";
            if (!point_doc.is_array()) throw input_error(pw + ": expected an array");
            Point point;
            for (std::size_t c = 0; c < point_doc.size(); ++c) {
                const json& coord = point_doc[c];
                const std::string xw = pw + "[" + std::to_string(c) + "]";
                if (!coord.is_string()) throw input_error(xw + ": expected a rational string");
                point.push_back(parse_rational(coord.get<std::string>(), xw));
            }
            colour.push_back(std::move(point));
        }
        config.colours.push_back(std::move(colour));
    }
    validate_configuration(config);
    return config;
}

json umbrella_to_json(const Umbrella& u) {
    return json{{"colour", u.colour}, {"transversal", u.transversal}};
}

Umbrella umbrella_from_json(const json& doc, const std::string& where) {
    const std::string w = where.empty() ? "umbrella" : where;
    if (!doc.is_object()) throw input_error(w + ": expected an object");
    Umbrella u;
    u.colour = expect_int(expect_field(doc, "colour", w), w + ".colour");
    const json& t = expect_field(doc, "transversal", w);
    if (!t.is_array()) throw input_error(w + ".transversal: expected an array");
    for (std::size_t i = 0; i < t.size(); ++i)
        u.transversal.push_back(expect_int(t[i], w + ".transversal[" + std::to_string(i) + "]"));
    return u;
}

json suitable_decomposition_to_json(const SuitableDecomposition& sd) {
    json umbrellas = json::array();
    for (const Umbrella& u : sd.umbrellas) umbrellas.push_back(umbrella_to_json(u));
    json parts = json::array();
    for (const OctahedralSystem& part : sd.parts) parts.push_back(system_to_json(part));
    return json{{"i1", sd.i1},
                {"vertex_order", sd.vertex_order},
                {"umbrellas", std::move(umbrellas)},
                {"parts", std::move(parts)},
                {"w", system_to_json(sd.w)}};
}

json minimum_report_to_json(const MinimumReport& report) {
    json per_k = json::array();
    for (const MinimumReport::PerK& entry : report.per_k)
        per_k.push_back(json{{"k", entry.k},
                             {"min", entry.min_size},
                             {"exhaustive", entry.exhaustive},
                             {"witness", system_to_json(entry.witness)}});
    return json{{"n", report.n},
                {"rank", report.rank},
                {"exhaustive", report.exhaustive},
                {"visited", report.visited},
                {"per_k", std::move(per_k)}};
}

json depth_report_to_json(const DepthReport& report, bool include_system) {
    json doc{{"depth", report.depth},
             {"boundary", report.boundary_count},
             {"degenerate", report.degenerate_count}};
    if (include_system) doc["induced_system"] = system_to_json(report.induced_system);
    return doc;
}

json parse_document(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw input_error(where + ": " + err.what());
    }
}

json load_document(const std::string& path) { return parse_document(read_file(path), path); }

void save_document(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

}  // namespace octa::io

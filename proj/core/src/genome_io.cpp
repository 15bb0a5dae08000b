#include "evoshapes/genome_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace evoshapes {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_to_json(Point p) { return ordered_json::array({p.x, p.y}); }

Point point_from_json(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw GenomeParseError(path + ": expected an [x, y] integer pair");
    return Point{j[0].get<int>(), j[1].get<int>()};
}

} // namespace

std::string serialize_genome(const Genome& genome) {
    ordered_json doc;
    doc["version"] = 1;
    doc["canvas"] = {{"width", genome.canvas.width}, {"height", genome.canvas.height}};
    ordered_json genes = ordered_json::array();
    for (const Gene& gene : genome.genes) {
        ordered_json g;
        g["kind"] = shape_kind_name(gene.kind());
        g["color"] = ordered_json::array({gene.color.r, gene.color.g, gene.color.b});
        g["alpha"] = gene.alpha;
        if (const auto* poly = std::get_if<PolygonGeometry>(&gene.geometry)) {
            ordered_json verts = ordered_json::array();
            for (Point v : poly->vertices) verts.push_back(point_to_json(v));
            g["vertices"] = std::move(verts);
        } else if (const auto* circle = std::get_if<CircleGeometry>(&gene.geometry)) {
            g["center"] = point_to_json(circle->center);
            g["radius"] = circle->radius;
        } else if (const auto* line = std::get_if<LineGeometry>(&gene.geometry)) {
            g["endpoints"] = ordered_json::array(
                {point_to_json(line->a), point_to_json(line->b)});
            g["thickness"] = line->thickness;
        }
        genes.push_back(std::move(g));
    }
    doc["genes"] = std::move(genes);
    return doc.dump(2) + "\n";
}

namespace {

const ordered_json& require_field(const ordered_json& obj, const char* key,
                                  const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw GenomeParseError(path + ": missing field '" + key + "'");
    return *it;
}

int require_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw GenomeParseError(path + ": expected an integer");
    return j.get<int>();
}

Gene gene_from_json(const ordered_json& g, std::size_t index) {
    const std::string path = "genes[" + std::to_string(index) + "]";
    if (!g.is_object()) throw GenomeParseError(path + ": expected an object");

    Gene gene;
    const ordered_json& kind_j = require_field(g, "kind", path);
    if (!kind_j.is_string())
        throw GenomeParseError(path + ".kind: expected a string");
    const std::string kind = kind_j.get<std::string>();

    const ordered_json& color = require_field(g, "color", path);
    if (!color.is_array() || color.size() != 3)
        throw GenomeParseError(path + ".color: expected [r, g, b]");
    for (int c = 0; c < 3; ++c) {
        const int v = require_int(color[c], path + ".color[" + std::to_string(c) + "]");
        if (v < 0 || v > 255)
            throw GenomeParseError(path + ".color[" + std::to_string(c) +
                                   "]: channel " + std::to_string(v) +
                                   " outside [0, 255]");
        (c == 0 ? gene.color.r : c == 1 ? gene.color.g : gene.color.b) =
            static_cast<std::uint8_t>(v);
    }

    const ordered_json& alpha = require_field(g, "alpha", path);
    if (!alpha.is_number())
        throw GenomeParseError(path + ".alpha: expected a number");
    gene.alpha = alpha.get<double>();

    if (kind == "polygon") {
        const ordered_json& verts = require_field(g, "vertices", path);
        if (!verts.is_array())
            throw GenomeParseError(path + ".vertices: expected an array of points");
        PolygonGeometry poly;
        for (std::size_t v = 0; v < verts.size(); ++v)
            poly.vertices.push_back(point_from_json(
                verts[v], path + ".vertices[" + std::to_string(v) + "]"));
        gene.geometry = std::move(poly);
    } else if (kind == "circle") {
        CircleGeometry circle;
        circle.center = point_from_json(require_field(g, "center", path), path + ".center");
        circle.radius = require_int(require_field(g, "radius", path), path + ".radius");
        gene.geometry = circle;
    } else if (kind == "line") {
        const ordered_json& ends = require_field(g, "endpoints", path);
        if (!ends.is_array() || ends.size() != 2)
            throw GenomeParseError(path + ".endpoints: expected two points");
        LineGeometry line;
        line.a = point_from_json(ends[0], path + ".endpoints[0]");
        line.b = point_from_json(ends[1], path + ".endpoints[1]");
        line.thickness =
            require_int(require_field(g, "thickness", path), path + ".thickness");
        gene.geometry = line;
    } else {
        throw GenomeParseError(path + ".kind: unknown shape kind '" + kind + "'");
    }
    return gene;
}

} // namespace

Genome deserialize_genome(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GenomeParseError(std::string("parse error at byte ") +
                               std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw GenomeParseError("document: expected a JSON object");

    const int version = require_int(require_field(doc, "version", "document"), "version");
    if (version != 1)
        throw GenomeParseError("version: unsupported genome file version " +
                               std::to_string(version));

    const ordered_json& canvas = require_field(doc, "canvas", "document");
    if (!canvas.is_object()) throw GenomeParseError("canvas: expected an object");
    Genome genome;
    genome.canvas.width = require_int(require_field(canvas, "width", "canvas"), "canvas.width");
    genome.canvas.height =
        require_int(require_field(canvas, "height", "canvas"), "canvas.height");

    const ordered_json& genes = require_field(doc, "genes", "document");
    if (!genes.is_array()) throw GenomeParseError("genes: expected an array");
    for (std::size_t i = 0; i < genes.size(); ++i)
        genome.genes.push_back(gene_from_json(genes[i], i));

    if (auto violations = validate_genome(genome); !violations.empty()) {
        std::ostringstream msg;
        msg << "genome violates " << violations.size() << " invariant(s): ";
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i) msg << "; ";
            if (violations[i].gene_index >= 0)
                msg << "genes[" << violations[i].gene_index << "].";
            msg << violations[i].field << " (" << violations[i].message << ")";
        }
        throw GenomeValidationError(msg.str(), std::move(violations));
    }
    return genome;
}

Genome load_genome(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open genome file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_genome(buf.str());
}

void save_genome(const Genome& genome, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write genome file: " + path.string());
    out << serialize_genome(genome);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace evoshapes

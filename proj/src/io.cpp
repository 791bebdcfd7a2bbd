#include "strata/io.hpp"

#include "strata/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace strata::io {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;
constexpr std::string_view kFormatName = "strata-result";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

bool is_flat(const Json& j) {
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

// Objects one member per line, arrays of scalars on a single line.
void write_json(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t k = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++k) {
            out += inner + Json(it.key()).dump() + ": ";
            write_json(it.value(), indent + 1, out);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out += inner;
            write_json(j[k], indent + 1, out);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double out = 0.0;
    std::from_chars(buf, buf + std::char_traits<char>::length(buf), out);
    return out == 0.0 ? 0.0 : out;
}

PointFile parse_point_file(std::string_view text) {
    std::vector<Point> pts;
    std::vector<std::array<std::string, 2>> raw;
    std::vector<std::size_t> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos));
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (line.empty() || line.front() == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"x,y\"", line_no);
        const std::string_view xs = trim(line.substr(0, comma)), ys = trim(line.substr(comma + 1));
        Point p;
        if (!parse_real(xs, p.x) || !parse_real(ys, p.y))
            throw ParseError("line " + std::to_string(line_no) + ": invalid coordinate in \"" + std::string(line) + "\"",
                             line_no);
        pts.push_back(p);
        raw.push_back({std::string(xs), std::string(ys)});
        lines.push_back(line_no);
    }
    if (pts.empty()) throw ParseError("no points in input", 0);
    try {
        PointSet s(std::move(pts));
        return PointFile{std::move(s), std::move(raw), std::move(lines), fnv1a64(text)};
    } catch (const DuplicatePoint& e) {
        const std::size_t second = lines[e.second()];
        throw ParseError("line " + std::to_string(second) + ": duplicate of the point on line " +
                             std::to_string(lines[e.first()]),
                         second);
    }
}

std::string write_point_file(std::span<const Point> points, std::string_view comment) {
    std::string out;
    if (!comment.empty()) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    char buf[64];
    for (const Point& p : points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

ResultDocument make_document(std::string command, const PointFile& file) {
    ResultDocument doc;
    doc.command = std::move(command);
    doc.checksum = file.checksum;
    doc.points = file.text;
    return doc;
}

std::vector<std::array<double, 2>> point_records(std::span<const Point> points) {
    std::vector<std::array<double, 2>> out;
    for (const Point& p : points) out.push_back({round12(p.x), round12(p.y)});
    return out;
}

std::vector<ContourRecord> contour_records(const LevelSet& ls) {
    std::vector<ContourRecord> out;
    for (const DepthContour& c : ls.contours) {
        ContourRecord rec;
        rec.level = c.level;
        rec.polygon = point_records(c.polygon);
        for (const ArcCurve& curve : c.curves) {
            auto& arcs = rec.curves.emplace_back();
            for (const Arc& a : curve) {
                arcs.push_back({{round12(a.circle.center.x), round12(a.circle.center.y)},
                                round12(a.circle.radius),
                                round12(a.start_angle),
                                round12(a.end_angle),
                                a.counterclockwise,
                                a.circle.defining_triple});
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string emit(const ResultDocument& doc) {
    Json j;
    j["format"] = kFormatName;
    j["version"] = kFormatVersion;
    j["command"] = doc.command;
    j["input"] = {{"points", doc.points.size()}, {"checksum", "fnv1a64:" + hex64(doc.checksum)}};
    j["points"] = doc.points;
    if (!doc.depths.empty()) j["depths"] = doc.depths;
    if (doc.set_depth) j["set_depth"] = *doc.set_depth;
    if (doc.layers) {
        Json arr = Json::array();
        for (const Layer& l : *doc.layers) {
            Json edges = Json::array();
            for (const Edge& e : l.edges) edges.push_back({e.a, e.b});
            arr.push_back({{"index", l.index},
                           {"vertices", l.vertices},
                           {"edges", edges},
                           {"components", l.components},
                           {"cycles", l.cycles}});
        }
        j["layers"] = arr;
    }
    if (doc.contours) {
        Json arr = Json::array();
        for (const ContourRecord& c : *doc.contours) {
            Json jc{{"level", c.level}};
            if (!c.polygon.empty() || c.curves.empty()) jc["polygon"] = c.polygon;
            if (!c.curves.empty()) {
                Json curves = Json::array();
                for (const auto& curve : c.curves) {
                    Json arcs = Json::array();
                    for (const ArcRecord& a : curve) {
                        Json ja{{"center", a.center},
                                {"radius", a.radius},
                                {"start", a.start},
                                {"end", a.end},
                                {"orientation", a.counterclockwise ? "ccw" : "cw"}};
                        if (a.triangle) ja["triangle"] = *a.triangle;
                        arcs.push_back(std::move(ja));
                    }
                    curves.push_back(std::move(arcs));
                }
                jc["curves"] = std::move(curves);
            }
            arr.push_back(std::move(jc));
        }
        j["contours"] = arr;
    }
    if (doc.medians) j["medians"] = *doc.medians;
    if (doc.query) {
        Json q{{"point", doc.query->point}, {"via", doc.query->via}, {"level", doc.query->level}};
        if (doc.query->alternative) q["alternative"] = *doc.query->alternative;
        j["query"] = std::move(q);
    }
    std::string out;
    write_json(j, 0, out);
    return out + "\n";
}

namespace {

std::uint64_t parse_checksum(const std::string& s) {
    constexpr std::string_view prefix = "fnv1a64:";
    if (s.size() != prefix.size() + 16 || s.compare(0, prefix.size(), prefix) != 0)
        throw ParseError("malformed checksum \"" + s + "\"", 0);
    std::uint64_t v = 0;
    const char* first = s.data() + prefix.size();
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v, 16);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("malformed checksum \"" + s + "\"", 0);
    return v;
}

ResultDocument from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("document is not an object", 0);
    if (j.at("format").get<std::string>() != kFormatName) throw ParseError("unknown document format", 0);
    if (j.at("version").get<int>() != kFormatVersion) throw ParseError("unsupported document version", 0);
    ResultDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.checksum = parse_checksum(j.at("input").at("checksum").get<std::string>());
    doc.points = j.at("points").get<std::vector<std::array<std::string, 2>>>();
    if (j.at("input").at("points").get<std::size_t>() != doc.points.size())
        throw ParseError("point count does not match the point list", 0);
    if (j.contains("depths")) doc.depths = j["depths"].get<std::map<std::string, std::vector<int>>>();
    if (j.contains("set_depth")) doc.set_depth = j["set_depth"].get<int>();
    if (j.contains("layers")) {
        auto& out = doc.layers.emplace();
        for (const Json& jl : j["layers"]) {
            Layer l;
            l.index = jl.at("index").get<int>();
            l.vertices = jl.at("vertices").get<std::vector<VertexId>>();
            for (const auto& e : jl.at("edges").get<std::vector<std::array<VertexId, 2>>>()) l.edges.push_back({e[0], e[1]});
            l.components = jl.at("components").get<std::vector<std::vector<VertexId>>>();
            l.cycles = jl.at("cycles").get<std::vector<std::vector<std::vector<VertexId>>>>();
            out.push_back(std::move(l));
        }
    }
    if (j.contains("contours")) {
        auto& out = doc.contours.emplace();
        for (const Json& jc : j["contours"]) {
            ContourRecord c;
            c.level = jc.at("level").get<int>();
            if (jc.contains("polygon")) c.polygon = jc["polygon"].get<std::vector<std::array<double, 2>>>();
            if (jc.contains("curves")) {
                for (const Json& jcurve : jc["curves"]) {
                    auto& curve = c.curves.emplace_back();
                    for (const Json& ja : jcurve) {
                        ArcRecord a;
                        a.center = ja.at("center").get<std::array<double, 2>>();
                        a.radius = ja.at("radius").get<double>();
                        a.start = ja.at("start").get<double>();
                        a.end = ja.at("end").get<double>();
                        const auto o = ja.at("orientation").get<std::string>();
                        if (o != "cw" && o != "ccw") throw ParseError("unknown arc orientation \"" + o + "\"", 0);
                        a.counterclockwise = o == "ccw";
                        if (ja.contains("triangle")) a.triangle = ja["triangle"].get<std::array<VertexId, 3>>();
                        curve.push_back(a);
                    }
                }
            }
            out.push_back(std::move(c));
        }
    }
    if (j.contains("medians")) doc.medians = j["medians"].get<std::vector<std::array<double, 2>>>();
    if (j.contains("query")) {
        const Json& jq = j["query"];
        QueryRecord q;
        q.point = jq.at("point").get<std::array<std::string, 2>>();
        q.via = jq.at("via").get<std::string>();
        q.level = jq.at("level").get<int>();
        if (jq.contains("alternative")) q.alternative = jq["alternative"].get<int>();
        doc.query = std::move(q);
    }
    return doc;
}

} // namespace

ResultDocument parse_document(std::string_view text) {
    try {
        return from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what(), 0);
    } catch (const Json::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

} // namespace strata::io

#pragma once

#include "strata/contours.hpp"
#include "strata/depth.hpp"
#include "strata/point_set.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strata::io {

/// Parsed point file. Coordinates keep their original spelling for echoing.
struct PointFile {
    PointSet points;
    std::vector<std::array<std::string, 2>> text;
    /// 1-based source line of every point.
    std::vector<std::size_t> lines;
    std::uint64_t checksum = 0;
};

/// One "x,y" pair per line; blank lines and lines starting with '#' are skipped.
/// Throws ParseError for malformed lines, empty files and repeated points.
PointFile parse_point_file(std::string_view text);

/// Formats points one per line with 17 significant digits.
std::string write_point_file(std::span<const Point> points, std::string_view comment = {});

/// 64-bit FNV-1a hash of the bytes.
std::uint64_t fnv1a64(std::string_view bytes);

/// Rounds to 12 significant digits, the precision of every real in a document.
double round12(double x);

struct ArcRecord {
    std::array<double, 2> center{};
    double radius = 0.0;
    double start = 0.0;
    double end = 0.0;
    bool counterclockwise = false;
    std::optional<std::array<VertexId, 3>> triangle;

    friend bool operator==(const ArcRecord&, const ArcRecord&) = default;
};

struct ContourRecord {
    int level = 1;
    std::vector<std::array<double, 2>> polygon;
    std::vector<std::vector<ArcRecord>> curves;

    friend bool operator==(const ContourRecord&, const ContourRecord&) = default;
};

struct QueryRecord {
    std::array<std::string, 2> point;
    std::string via;
    int level = 1;
    std::optional<int> alternative;

    friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

/// Output of every subcommand. Sections a command does not produce stay empty.
struct ResultDocument {
    std::string command;
    std::uint64_t checksum = 0;
    std::vector<std::array<std::string, 2>> points;
    /// Depth labels keyed by method name.
    std::map<std::string, std::vector<int>> depths;
    std::optional<int> set_depth;
    std::optional<std::vector<Layer>> layers;
    std::optional<std::vector<ContourRecord>> contours;
    std::optional<std::vector<std::array<double, 2>>> medians;
    std::optional<QueryRecord> query;

    friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// Starts a document for `command` over the points of `file`.
ResultDocument make_document(std::string command, const PointFile& file);

std::vector<ContourRecord> contour_records(const LevelSet& ls);
std::vector<std::array<double, 2>> point_records(std::span<const Point> points);

std::string emit(const ResultDocument& doc);
/// Throws ParseError when the text is not a well-formed document.
ResultDocument parse_document(std::string_view text);

struct RenderOptions {
    bool levels = true;
    bool layers = true;
    double width = 800.0;
};

/// SVG 1.1 drawing of the points colored by depth, the layer edges and the contours.
/// Identical inputs give identical bytes.
std::string render_svg(const PointSet& s, const DepthLabels& d, const std::vector<Layer>& layers,
                       const LevelSet& ls, const RenderOptions& options = {});

} // namespace strata::io

#include "gridzero/csv.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gridzero/errors.hpp"
#include "gridzero/parse.hpp"

namespace gridzero {
namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

GaussRational parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    try {
        return parse_gauss_rational(cell);
    } catch (const SyntaxError& e) {
        throw ParseError(row, col, std::string("bad coordinate '") + cell + "': " + e.what());
    }
}

}  // namespace

PointSet load_points_stream(std::istream& in, std::string label) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, 1, "empty file");
    {
        std::string header = strip(line);
        header.erase(std::remove_if(header.begin(), header.end(),
                                    [](char c) { return c == ' ' || c == '\t'; }),
                     header.end());
        if (header != "u,v") throw ParseError(1, 1, "expected header 'u,v', got '" + line + "'");
    }
    std::vector<Point> pts;
    std::set<Point> seen;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (strip(line).empty()) continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw ParseError(row, 1, "expected two comma-separated cells");
        std::string cu = strip(line.substr(0, comma));
        std::string cv = strip(line.substr(comma + 1));
        if (cv.find(',') != std::string::npos)
            throw ParseError(row, comma + 2, "expected exactly two cells");
        Point p{parse_cell(cu, row, 1), parse_cell(cv, row, comma + 2)};
        if (!seen.insert(p).second)
            throw DuplicatePointError(row, "duplicate point " + p.str() + " at row " +
                                               std::to_string(row));
        pts.push_back(std::move(p));
    }
    // Points already deduplicated; construct directly.
    return PointSet(std::move(pts), std::move(label));
}

PointSet load_points(const std::string& path, std::string label) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open point file: " + path);
    if (label.empty()) label = path;
    return load_points_stream(in, std::move(label));
}

void save_points_stream(const PointSet& pts, std::ostream& out) {
    out << "u,v\n";
    for (const Point& p : pts) out << p.u.str() << "," << p.v.str() << "\n";
}

void save_points(const PointSet& pts, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    save_points_stream(pts, out);
}

}  // namespace gridzero

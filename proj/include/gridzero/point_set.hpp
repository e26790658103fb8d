#pragma once

#include <string>
#include <vector>

#include "gridzero/gauss_rational.hpp"

namespace gridzero {

/// Planar point with exact coordinates.
struct Point {
    GaussRational u, v;

    friend bool operator==(const Point& a, const Point& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    }

    std::string str() const { return "(" + u.str() + ", " + v.str() + ")"; }
};

/// Ordered list of distinct planar points. Duplicates are rejected at
/// construction; order is preserved for deterministic reports.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts, std::string label = {});

    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::string& label() const { return label_; }

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    bool contains(const Point& p) const;

private:
    std::vector<Point> pts_;
    std::string label_;
};

}  // namespace gridzero

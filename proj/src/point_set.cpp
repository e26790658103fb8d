#include "gridzero/point_set.hpp"

#include <algorithm>
#include <set>

#include "gridzero/errors.hpp"

namespace gridzero {

PointSet::PointSet(std::vector<Point> pts, std::string label)
    : pts_(std::move(pts)), label_(std::move(label)) {
    std::set<Point> seen;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (!seen.insert(pts_[i]).second)
            throw DuplicatePointError(i, "duplicate point " + pts_[i].str() + " at index " +
                                             std::to_string(i));
    }
}

bool PointSet::contains(const Point& p) const {
    return std::find(pts_.begin(), pts_.end(), p) != pts_.end();
}

}  // namespace gridzero

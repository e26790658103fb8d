#pragma once

#include <iosfwd>
#include <string>

#include "gridzero/point_set.hpp"

namespace gridzero {

/// Read a point set from CSV with header "u,v". Cells are constant
/// expressions over the grammar ("3", "1/2", "1/2+2/3*i", "i"); spaces are
/// ignored. Duplicate rows raise DuplicatePointError with the offending row
/// number (1-based, counting the header).
PointSet load_points(const std::string& path, std::string label = {});
PointSet load_points_stream(std::istream& in, std::string label = {});

void save_points(const PointSet& pts, const std::string& path);
void save_points_stream(const PointSet& pts, std::ostream& out);

}  // namespace gridzero

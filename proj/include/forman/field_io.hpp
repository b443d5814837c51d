#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "forman/complex.hpp"
#include "forman/datagen.hpp"

namespace forman {

/// CSV with header x1..xd,v1..vd and one sample per row. Blank lines are
/// skipped. Throws ParseError with the offending line.
FieldSample read_field_csv(std::istream& in);
FieldSample read_field_csv(const std::string& path);

void write_field_csv(std::ostream& out, const FieldSample& sample);
void write_field_csv(const std::string& path, const FieldSample& sample);

/// CSV with header y1..yd, one landmark per row.
std::vector<Vector> read_points_csv(const std::string& path, char column_prefix = 'y');

/// 0/1 matrix, one row per landmark and one column per data point, no header.
std::vector<std::vector<bool>> read_relation_csv(const std::string& path);

/// Formats with 9 significant digits ("%.9g").
std::string format_number(double value);

}  // namespace forman

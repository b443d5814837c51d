#include "forman/field_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "forman/error.hpp"

namespace forman {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& text, int line)
{
    double v = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) throw ParseError("not a number: '" + text + "'", line);
    if (!std::isfinite(v)) throw ParseError("non-finite value '" + text + "'", line);
    return v;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    return out;
}

// Column names read prefix1, prefix2, ...
bool is_column(const std::string& name, char prefix, std::size_t one_based)
{
    return name == std::string(1, prefix) + std::to_string(one_based);
}

// Reads rows of `width` numbers after the header; lines numbered from 1.
std::vector<std::vector<double>> read_rows(std::istream& in, std::size_t width, int& line_no)
{
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        if (cells.size() != width)
            throw ParseError("expected " + std::to_string(width) + " values, found " + std::to_string(cells.size()),
                             line_no);
        std::vector<double> row;
        row.reserve(width);
        for (const auto& c : cells) row.push_back(parse_double(c, line_no));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> read_header(std::istream& in, int& line_no)
{
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) return split(line);
    }
    throw ParseError("empty input", line_no > 0 ? line_no : 1);
}

}  // namespace

FieldSample read_field_csv(std::istream& in)
{
    int line_no = 0;
    const auto header = read_header(in, line_no);
    const int header_line = line_no;
    if (header.size() < 2 || header.size() % 2 != 0)
        throw ParseError("header must be x1..xd,v1..vd", header_line);
    const std::size_t d = header.size() / 2;
    for (std::size_t k = 0; k < d; ++k) {
        if (!is_column(header[k], 'x', k + 1) || !is_column(header[d + k], 'v', k + 1))
            throw ParseError("header must be x1..xd,v1..vd", header_line);
    }
    FieldSample s;
    for (const auto& row : read_rows(in, 2 * d, line_no)) {
        s.points.push_back(Eigen::Map<const Vector>(row.data(), static_cast<Eigen::Index>(d)));
        s.vectors.push_back(Eigen::Map<const Vector>(row.data() + d, static_cast<Eigen::Index>(d)));
    }
    if (s.points.empty()) throw ParseError("no samples after the header", header_line);
    return s;
}

FieldSample read_field_csv(const std::string& path)
{
    auto in = open_input(path);
    return read_field_csv(in);
}

std::string format_number(double value)
{
    char buf[32];
    if (value == 0.0) value = 0.0;  // no "-0"
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

void write_field_csv(std::ostream& out, const FieldSample& sample)
{
    if (sample.points.size() != sample.vectors.size()) throw ParameterError("points and vectors differ in length");
    const std::size_t d = sample.points.empty() ? 2 : static_cast<std::size_t>(sample.points.front().size());
    for (std::size_t k = 1; k <= d; ++k) out << 'x' << k << ',';
    for (std::size_t k = 1; k <= d; ++k) out << 'v' << k << (k < d ? "," : "\n");
    for (std::size_t i = 0; i < sample.points.size(); ++i) {
        for (std::size_t k = 0; k < d; ++k) out << format_number(sample.points[i][k]) << ',';
        for (std::size_t k = 0; k < d; ++k) out << format_number(sample.vectors[i][k]) << (k + 1 < d ? "," : "\n");
    }
}

void write_field_csv(const std::string& path, const FieldSample& sample)
{
    auto out = open_output(path);
    write_field_csv(out, sample);
    if (!out) throw Error("failed writing '" + path + "'");
}

std::vector<Vector> read_points_csv(const std::string& path, char column_prefix)
{
    auto in = open_input(path);
    int line_no = 0;
    const auto header = read_header(in, line_no);
    for (std::size_t k = 0; k < header.size(); ++k)
        if (!is_column(header[k], column_prefix, k + 1))
            throw ParseError(std::string("header must be ") + column_prefix + "1.." + column_prefix + "d", line_no);
    std::vector<Vector> pts;
    for (const auto& row : read_rows(in, header.size(), line_no))
        pts.push_back(Eigen::Map<const Vector>(row.data(), static_cast<Eigen::Index>(row.size())));
    return pts;
}

std::vector<std::vector<bool>> read_relation_csv(const std::string& path)
{
    auto in = open_input(path);
    std::vector<std::vector<bool>> rel;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<bool> row;
        for (const auto& cell : split(line)) {
            if (cell != "0" && cell != "1") throw ParseError("relation entries must be 0 or 1", line_no);
            row.push_back(cell == "1");
        }
        if (!rel.empty() && row.size() != rel.front().size()) throw ParseError("ragged relation row", line_no);
        rel.push_back(std::move(row));
    }
    if (rel.empty()) throw ParseError("empty relation", 1);
    return rel;
}

}  // namespace forman

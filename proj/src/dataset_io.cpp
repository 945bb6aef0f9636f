#include "idim/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "idim/error.hpp"

namespace idim {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

RealVector parse_real_row(std::string_view line, std::size_t line_no) {
    RealVector row;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && is_separator(line[pos])) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && !is_separator(line[end])) ++end;
        std::string_view token = line.substr(pos, end - pos);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw InvalidInput(fmt::format("line {}: cannot parse number '{}'", line_no,
                                           line.substr(pos, end - pos)));
        }
        row.push_back(value);
        pos = end;
    }
    return row;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Dataset read_dataset(std::istream& in, const MetricDescriptor& metric) {
    const bool bits = metric.kind() == MetricKind::HammingNormalized;
    std::vector<Point> points;
    std::size_t expected_dim = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;

        if (bits) {
            if (body.find_first_not_of("01") != std::string_view::npos) {
                throw InvalidInput(fmt::format("line {}: expected a 0/1 string", line_no));
            }
            points.push_back(Point::bits(BitVector::from_string(body)));
        } else {
            RealVector row = parse_real_row(body, line_no);
            if (row.empty()) throw InvalidInput(fmt::format("line {}: no values", line_no));
            try {
                points.push_back(Point::real(std::move(row)));
            } catch (const InvalidInput& e) {
                throw InvalidInput(fmt::format("line {}: {}", line_no, e.what()));
            }
        }
        if (expected_dim == 0) {
            expected_dim = points.back().dimension();
        } else if (points.back().dimension() != expected_dim) {
            throw InvalidInput(fmt::format("line {}: expected {} values, found {}", line_no,
                                           expected_dim, points.back().dimension()));
        }
    }
    if (points.empty()) throw InvalidInput("dataset is empty: no data rows found");
    return Dataset(std::move(points), metric);
}

Dataset read_dataset_file(const std::string& path, const MetricDescriptor& metric) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(fmt::format("cannot open '{}'", path));
    return read_dataset(in, metric);
}

void write_dataset(std::ostream& out, const Dataset& ds) {
    std::string buf;
    for (const Point& p : ds.points()) {
        buf.clear();
        if (p.is_bits()) {
            buf = p.bit_vector().to_string();
        } else {
            const auto& c = p.coords();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) buf += ' ';
                fmt::format_to(std::back_inserter(buf), "{:.17g}", c[i]);
            }
        }
        buf += '\n';
        out << buf;
    }
}

}  // namespace idim

#include "wwlab/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace wwlab {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, end);
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os), columns_(header.size()) {
    for (const auto& h : header) *this << std::string_view(h);
    end_row();
}

void CsvWriter::separator() {
    if (current_++ > 0) os_ << ',';
}

CsvWriter& CsvWriter::operator<<(double v) {
    separator();
    os_ << format_double(v);
    return *this;
}

CsvWriter& CsvWriter::operator<<(long long v) {
    separator();
    os_ << v;
    return *this;
}

CsvWriter& CsvWriter::operator<<(std::string_view s) {
    separator();
    if (s.find_first_of(",\"\n") != std::string_view::npos) {
        os_ << '"';
        for (char c : s) {
            if (c == '"') os_ << '"';
            os_ << c;
        }
        os_ << '"';
    } else {
        os_ << s;
    }
    return *this;
}

void CsvWriter::end_row() {
    if (current_ != columns_) throw std::logic_error("csv row has the wrong number of columns");
    os_ << '\n';
    current_ = 0;
}

}  // namespace wwlab

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wwlab {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Comma-separated rows with a header, LF line endings.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header);

    CsvWriter& operator<<(double v);
    CsvWriter& operator<<(long long v);
    CsvWriter& operator<<(int v) { return *this << static_cast<long long>(v); }
    CsvWriter& operator<<(std::size_t v) { return *this << static_cast<long long>(v); }
    CsvWriter& operator<<(std::string_view s);
    CsvWriter& operator<<(const char* s) { return *this << std::string_view(s); }
    /// Terminates the current row; throws if the column count differs from the header.
    void end_row();

private:
    void separator();
    std::ostream& os_;
    std::size_t columns_;
    std::size_t current_ = 0;
};

}  // namespace wwlab

#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace fedgame {

/// Shortest round-trip decimal form of a double, locale-independent
/// (decimal point, no grouping).
std::string format_double(double v);

/// CSV with a fixed header, one row() call per line. Numeric cells use
/// format_double.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void row(const std::vector<std::string>& cells);
    std::string str() const { return out_.str(); }

    static std::string cell(double v) { return format_double(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(long long v) { return std::to_string(v); }

private:
    std::size_t columns_;
    std::ostringstream out_;
};

/// Writes via a temp file in the same directory, then renames over the
/// target, so readers never observe partial files.
void atomic_write_file(const std::filesystem::path& path, const std::string& contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace fedgame

/**
 * @file bfile.hpp
 * @brief Reader/writer for the b-file sequence interchange format: one
 *        "index value" pair per line, '#' comments, decimal integers of
 *        unbounded size.
 */
#ifndef TRINOM_BFILE_HPP
#define TRINOM_BFILE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trinom/exact.hpp"

namespace trinom {

struct BFileEntry {
    long index;
    ExactInt value;
};

/// Parse failure with the 1-based line number it occurred on.
class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses b-file text. Blank lines and '#' comments are skipped; data lines
/// must be exactly "index value" with strictly increasing indices.
std::vector<BFileEntry> parse_bfile(std::string_view text);

/// Renders entries as b-file text, one "index value" line each, LF endings.
std::string render_bfile(const std::vector<BFileEntry>& entries);

}  // namespace trinom

#endif  // TRINOM_BFILE_HPP

#include "trinom/bfile.hpp"

#include <cctype>
#include <optional>

namespace trinom {

namespace {

bool is_integer_token(std::string_view tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> entries;
    std::optional<long> prev_index;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0][0] == '#') continue;
        if (toks.size() != 2)
            throw BFileError(lineno, "expected 'index value', got " +
                                         std::to_string(toks.size()) + " token(s)");
        if (!is_integer_token(toks[0]))
            throw BFileError(lineno, "index is not an integer: '" + std::string(toks[0]) + "'");
        if (!is_integer_token(toks[1]))
            throw BFileError(lineno, "value is not an integer: '" + std::string(toks[1]) + "'");

        ExactInt index_big{std::string(toks[0])};
        if (!index_big.fits_long()) throw BFileError(lineno, "index out of range");
        long index = index_big.to_long();
        if (prev_index && index <= *prev_index)
            throw BFileError(lineno, "indices must be strictly increasing (" +
                                         std::to_string(index) + " after " +
                                         std::to_string(*prev_index) + ")");
        prev_index = index;
        entries.push_back({index, ExactInt{std::string(toks[1])}});
    }
    return entries;
}

std::string render_bfile(const std::vector<BFileEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += e.value.str();
        out += '\n';
    }
    return out;
}

}  // namespace trinom

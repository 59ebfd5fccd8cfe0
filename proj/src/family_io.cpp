#include "equidist/family_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "equidist/error.hpp"

namespace equidist {

namespace {

std::vector<long long> parse_integers(const std::string& line, int line_no) {
    std::vector<long long> values;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InvalidInput("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
        }
        values.push_back(v);
    }
    return values;
}

bool is_blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Family parse_family(std::istream& in) {
    std::optional<std::pair<int, int>> header;
    std::vector<Word> members;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto values = parse_integers(line, line_no);
        if (!header) {
            if (values.size() != 2) throw InvalidInput("line " + std::to_string(line_no) + ": header must be 'n q'");
            if (values[0] < 1 || values[0] > (1 << 20)) throw InvalidInput("header: n must be a positive integer");
            if (values[1] < 2 || values[1] > (1LL << 31)) throw InvalidInput("header: q must be at least 2");
            header.emplace(static_cast<int>(values[0]), static_cast<int>(values[1]));
            continue;
        }
        auto [n, q] = *header;
        if (static_cast<int>(values.size()) != n) {
            throw InvalidInput("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                               " symbols, found " + std::to_string(values.size()));
        }
        Word w(n);
        for (int i = 0; i < n; ++i) {
            if (values[i] < 0 || values[i] >= q) {
                throw InvalidInput("line " + std::to_string(line_no) + ": symbol " + std::to_string(values[i]) +
                                   " outside {0,...," + std::to_string(q - 1) + "}");
            }
            w[i] = static_cast<Symbol>(values[i]);
        }
        members.push_back(std::move(w));
    }
    if (!header) throw InvalidInput("missing 'n q' header");
    return Family(header->first, header->second, std::move(members));
}

Family parse_family(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_family(in);
}

std::string serialize_family(const Family& f) {
    std::ostringstream os;
    os << f.n() << ' ' << f.q() << '\n';
    for (const auto& w : f.members()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ' ';
            os << w[i];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace equidist

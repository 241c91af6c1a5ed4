#include "coursealloc/preflib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace coursealloc {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

bool parse_int(const std::string& s, int& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoi(t, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == t.size();
}

// Value of a "# KEY: value" metadata line if it matches `key`, else empty.
bool metadata_value(const std::string& line, const std::string& key, std::string& out) {
    std::string body = trim(line.substr(1));
    if (body.size() < key.size() || body.compare(0, key.size(), key) != 0) return false;
    body = trim(body.substr(key.size()));
    if (body.empty() || body[0] != ':') return false;
    out = trim(body.substr(1));
    return true;
}

}  // namespace

PreferenceProfile parse_strict_order(const std::string& text) {
    PreferenceProfile profile;
    int declared_alternatives = -1;
    int declared_voters = -1;
    std::map<std::vector<int>, int> merged;

    std::istringstream in(text);
    std::string raw;
    int line_number = 0;
    int last_line = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string line = trim(raw);
        if (line.empty()) continue;
        last_line = line_number;

        if (line[0] == '#') {
            std::string value;
            if (metadata_value(line, "NUMBER ALTERNATIVES", value) ||
                metadata_value(line, "NUMBER OF ALTERNATIVES", value)) {
                if (!parse_int(value, declared_alternatives) || declared_alternatives < 1)
                    throw ParseError(line_number, "bad alternative count '" + value + "'");
            } else if (metadata_value(line, "NUMBER VOTERS", value) ||
                       metadata_value(line, "NUMBER OF VOTERS", value)) {
                if (!parse_int(value, declared_voters) || declared_voters < 0)
                    throw ParseError(line_number, "bad voter count '" + value + "'");
            }
            continue;  // other metadata (titles, alternative names) is informative only
        }

        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_number, "expected 'count: ranking', got '" + line + "'");
        int multiplicity = 0;
        if (!parse_int(line.substr(0, colon), multiplicity) || multiplicity < 1)
            throw ParseError(line_number, "ranking count must be a positive integer");

        std::vector<int> order;
        std::istringstream rest(line.substr(colon + 1));
        std::string token;
        while (std::getline(rest, token, ',')) {
            int alt = 0;
            if (!parse_int(token, alt))
                throw ParseError(line_number, "bad alternative '" + trim(token) + "'");
            order.push_back(alt - 1);  // file ids are 1-based
        }
        if (order.empty()) throw ParseError(line_number, "empty ranking");

        if (profile.alternative_count == 0) {
            profile.alternative_count =
                declared_alternatives > 0 ? declared_alternatives : static_cast<int>(order.size());
        }
        if (static_cast<int>(order.size()) != profile.alternative_count)
            throw ParseError(line_number, "ranking is incomplete: expected " +
                                              std::to_string(profile.alternative_count) +
                                              " alternatives, got " +
                                              std::to_string(order.size()));
        std::vector<char> seen(static_cast<std::size_t>(profile.alternative_count), 0);
        for (int alt : order) {
            if (alt < 0 || alt >= profile.alternative_count)
                throw ParseError(line_number,
                                 "alternative " + std::to_string(alt + 1) + " out of range");
            if (seen[static_cast<std::size_t>(alt)])
                throw ParseError(line_number,
                                 "duplicate alternative " + std::to_string(alt + 1));
            seen[static_cast<std::size_t>(alt)] = 1;
        }
        merged[order] += multiplicity;
    }

    if (merged.empty()) throw ParseError(std::max(1, last_line), "no rankings found");
    if (declared_alternatives > 0 && declared_alternatives != profile.alternative_count)
        throw ParseError(last_line, "declared alternative count does not match rankings");

    for (const auto& [order, mult] : merged) {
        profile.orders.push_back(order);
        profile.multiplicities.push_back(mult);
    }
    if (declared_voters >= 0 && profile.voter_count() != declared_voters)
        throw ParseError(last_line, "declared voter count " + std::to_string(declared_voters) +
                                        " does not match rankings (" +
                                        std::to_string(profile.voter_count()) + ")");
    return profile;
}

PreferenceProfile load_preflib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open preference file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_strict_order(buffer.str());
}

}  // namespace coursealloc

#include "coursealloc/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coursealloc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("problem file: " + what);
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing required field '") + key + "'");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

LoadedProblem problem_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("top level must be an object");

    LoadedProblem out;
    Problem& p = out.problem;
    p.n = int_field(j, "n");
    p.m = int_field(j, "m");
    p.b = int_field(j, "b");
    p.f = int_field(j, "f");

    // w is experiment-defining; no default.
    const json& w = field(j, "w");
    if (!w.is_number()) fail("field 'w' must be a number");
    p.w = w.get<double>();

    if (j.contains("q_per_course")) {
        // Per-course capacities are accepted for forward compatibility but the
        // engine requires them uniform.
        const json& qs = j["q_per_course"];
        if (!qs.is_array() || qs.empty()) fail("field 'q_per_course' must be a non-empty array");
        int q0 = 0;
        for (std::size_t c = 0; c < qs.size(); ++c) {
            if (!qs[c].is_number_integer()) fail("q_per_course[" + std::to_string(c) + "] must be an integer");
            const int qc = qs[c].get<int>();
            if (c == 0) {
                q0 = qc;
            } else if (qc != q0) {
                fail("q_per_course must be uniform; course " + std::to_string(c) + " differs");
            }
        }
        p.q = q0;
    } else {
        p.q = int_field(j, "q");
    }

    const json& prefs = field(j, "preferences");
    if (!prefs.is_array()) fail("field 'preferences' must be an array");
    for (std::size_t i = 0; i < prefs.size(); ++i) {
        if (!prefs[i].is_array()) fail("preferences[" + std::to_string(i) + "] must be an array");
        std::vector<int> row;
        for (const json& c : prefs[i]) {
            if (!c.is_number_integer()) fail("preferences[" + std::to_string(i) + "] must hold course indices");
            row.push_back(c.get<int>());
        }
        p.pref_order.push_back(std::move(row));
    }

    const json& friends = field(j, "friends");
    if (!friends.is_array()) fail("field 'friends' must be an array");
    for (std::size_t i = 0; i < friends.size(); ++i) {
        if (!friends[i].is_array()) fail("friends[" + std::to_string(i) + "] must be an array");
        std::vector<FriendRef> row;
        for (std::size_t k = 0; k < friends[i].size(); ++k) {
            const json& fr = friends[i][k];
            const std::string path = "friends[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            if (!fr.is_object() || !fr.contains("student") || !fr.contains("rank"))
                fail(path + " must be an object with 'student' and 'rank'");
            if (!fr["student"].is_number_integer() || !fr["rank"].is_number_integer())
                fail(path + ": 'student' and 'rank' must be integers");
            row.push_back(FriendRef{fr["student"].get<int>(), fr["rank"].get<int>()});
        }
        std::sort(row.begin(), row.end(),
                  [](const FriendRef& a, const FriendRef& b) { return a.rank < b.rank; });
        p.friends.push_back(std::move(row));
    }

    if (j.contains("name")) {
        if (!j["name"].is_string()) fail("field 'name' must be a string");
        p.name = j["name"].get<std::string>();
    }
    if (j.contains("order")) {
        const json& order = j["order"];
        if (!order.is_array()) fail("field 'order' must be an array");
        std::vector<int> values;
        for (const json& v : order) {
            if (!v.is_number_integer()) fail("field 'order' must hold student indices");
            values.push_back(v.get<int>());
        }
        std::vector<char> seen(static_cast<std::size_t>(p.n), 0);
        if (values.size() != static_cast<std::size_t>(p.n)) fail("field 'order' must list every student once");
        for (int v : values) {
            if (v < 0 || v >= p.n || seen[static_cast<std::size_t>(v)])
                fail("field 'order' must be a permutation of the students");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        out.fixed_order = std::move(values);
    }

    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return out;
}

LoadedProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return problem_from_json_text(buffer.str());
}

std::string problem_to_json_text(const Problem& problem,
                                 const std::map<std::string, std::string>& metadata) {
    json j;
    if (!problem.name.empty()) j["name"] = problem.name;
    j["n"] = problem.n;
    j["m"] = problem.m;
    j["b"] = problem.b;
    j["q"] = problem.q;
    j["f"] = problem.f;
    j["w"] = problem.w;
    j["preferences"] = problem.pref_order;
    json friends = json::array();
    for (const auto& row : problem.friends) {
        json jrow = json::array();
        for (const FriendRef& fr : row) jrow.push_back({{"student", fr.student}, {"rank", fr.rank}});
        friends.push_back(std::move(jrow));
    }
    j["friends"] = std::move(friends);
    if (!metadata.empty()) j["metadata"] = metadata;
    return j.dump(2) + "\n";
}

void save_problem(const Problem& problem, const std::string& path,
                  const std::map<std::string, std::string>& metadata) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write problem file: " + path);
    out << problem_to_json_text(problem, metadata);
    if (!out) throw std::runtime_error("failed writing problem file: " + path);
}

}  // namespace coursealloc

#include "linkchroma/tables.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace linkchroma {

namespace {

TableEntry parse_line(const std::string& line, const std::string& where) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw TableError(where + ": bad JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("pd"))
        throw TableError(where + ": expected an object with \"name\" and \"pd\"");
    TableEntry entry;
    if (!j["name"].is_string()) throw TableError(where + ": \"name\" must be a string");
    entry.name = j["name"].get<std::string>();
    if (!j["pd"].is_array()) throw TableError(where + ": \"pd\" must be an array of 4-tuples");
    for (const auto& x : j["pd"]) {
        if (!x.is_array() || x.size() != 4)
            throw TableError(where + ": each crossing must be a 4-tuple");
        std::array<int, 4> t{};
        for (int i = 0; i < 4; ++i) {
            if (!x[i].is_number_integer()) throw TableError(where + ": edge labels must be integers");
            t[i] = x[i].get<int>();
        }
        entry.pd.crossings.push_back(t);
    }
    if (j.contains("det")) {
        if (j["det"].is_number_integer())
            entry.expected_det = Int(j["det"].get<long>());
        else if (j["det"].is_string())
            entry.expected_det = Int(j["det"].get<std::string>());
        else
            throw TableError(where + ": \"det\" must be an integer or a decimal string");
    }
    return entry;
}

}  // namespace

std::vector<TableEntry> load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TableError("cannot open " + path.string());
    std::vector<TableEntry> entries;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::string where = path.filename().string() + ":" + std::to_string(lineno);
        TableEntry entry = parse_line(line, where);
        if (!seen.insert(entry.name).second)
            throw TableError(where + ": duplicate name \"" + entry.name + "\"");
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::string serialize_table(const std::vector<TableEntry>& entries) {
    std::ostringstream out;
    for (const auto& e : entries) {
        nlohmann::json j;
        j["name"] = e.name;
        nlohmann::json pd = nlohmann::json::array();
        for (const auto& t : e.pd.crossings) pd.push_back({t[0], t[1], t[2], t[3]});
        j["pd"] = pd;
        if (e.expected_det) {
            if (e.expected_det->fits_slong_p())
                j["det"] = e.expected_det->get_si();
            else
                j["det"] = e.expected_det->get_str();
        }
        out << j.dump() << "\n";
    }
    return out.str();
}

ExpectedReport check_expected(const std::vector<TableEntry>& entries) {
    ExpectedReport report;
    for (const auto& e : entries) {
        if (!e.expected_det) {
            ++report.skipped;
            continue;
        }
        Int computed = determinant(build_diagram(e.pd));
        ++report.checked;
        if (computed != *e.expected_det)
            report.mismatches.push_back({e.name, *e.expected_det, computed});
    }
    return report;
}

}  // namespace linkchroma

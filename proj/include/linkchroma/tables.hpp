#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "linkchroma/coloring.hpp"
#include "linkchroma/diagram.hpp"

namespace linkchroma {

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableEntry {
    std::string name;
    PDCode pd;
    std::optional<Int> expected_det;
};

/// JSON lines, one {"name":..., "pd":[[i,j,k,l],...], "det":...} per line.
/// Fails fast on the first malformed or duplicate-name line, naming it.
std::vector<TableEntry> load_table(const std::filesystem::path& path);

std::string serialize_table(const std::vector<TableEntry>& entries);

struct ExpectedReport {
    struct Mismatch {
        std::string name;
        Int expected;
        Int computed;
    };
    int checked = 0;
    int skipped = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Recomputes determinants against the expected_det column.
ExpectedReport check_expected(const std::vector<TableEntry>& entries);

}  // namespace linkchroma

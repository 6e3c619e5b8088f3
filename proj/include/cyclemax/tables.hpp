#pragma once

#include <string>
#include <vector>

namespace cyclemax {

// A row of the reference tables of cycle counts and upper bounds.
struct TableRow {
    std::string graph;
    int n;
    std::string relation;  // "=" exact, "<=" upper bound
    std::string value;
    std::string source;    // "turan", "permanent", "obvious"

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::vector<TableRow> golden_table_rows();
// Every row recomputed from scratch, sorted by n.
std::vector<TableRow> compute_table_rows();

struct TableDiff {
    std::string graph;
    std::string expected;
    std::string actual;
};
std::vector<TableDiff> diff_tables(const std::vector<TableRow>& expected, const std::vector<TableRow>& actual);

}

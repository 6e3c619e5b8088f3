#pragma once

#include "cyclemax/search.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cyclemax {

// One record per line, keys sorted, big integers as strings.
std::string record_to_json(const CandidateRecord& r);
CandidateRecord record_from_json(std::string_view line);
std::string records_to_jsonl(const std::vector<CandidateRecord>& rs);

std::vector<std::string> record_columns();
std::vector<std::string> record_cells(const CandidateRecord& r);
std::string records_to_csv(const std::vector<CandidateRecord>& rs);
std::string records_to_table(const std::vector<CandidateRecord>& rs);

struct ScreenSummary {
    std::size_t candidates = 0;
    std::size_t eliminated = 0;
    std::size_t survivors = 0;
    std::size_t excluded = 0;
    std::size_t exact_counted = 0;  // eliminated only by exact counting
    std::size_t exhaustive = 0;     // eliminated only by exhaustive search
};
ScreenSummary summarize(const std::vector<CandidateRecord>& rs);
std::string summary_line(const ScreenSummary& s);

}

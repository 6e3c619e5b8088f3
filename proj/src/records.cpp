#include "cyclemax/records.hpp"
#include "cyclemax/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace cyclemax {

const char* family_name(Family f)
{
    switch (f) {
    case Family::regular_pair: return "regular-pair";
    case Family::gamma_blowup: return "gamma-blowup";
    case Family::near_regular_shape: return "near-regular-shape";
    case Family::explicit_graph: return "explicit-graph";
    }
    return "explicit-graph";
}

Family family_from_name(const std::string& s)
{
    for (Family f : {Family::regular_pair, Family::gamma_blowup, Family::near_regular_shape, Family::explicit_graph})
        if (s == family_name(f))
            return f;
    throw DomainError("unknown record family \"" + s + "\"");
}

long long CandidateRecord::param(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end())
        throw DomainError("record has no parameter \"" + key + "\"");
    return it->second;
}

bool CandidateRecord::eliminated() const
{
    return verdict.starts_with("eliminated");
}

bool record_consistent(const CandidateRecord& r)
{
    if (!r.eliminated())
        return true;
    const BigCount turan(r.turan);
    for (const auto& b : r.bounds) {
        if (b.name != r.eliminated_by)
            continue;
        if (b.is_log)
            return std::stold(b.value) < ln_big(turan);
        return BigCount(b.value) < turan;
    }
    return false;
}

DegreeThresholds thresholds()
{
    DegreeThresholds t;
    for (long long i = 2; i <= 10; ++i)
        t.gamma.push_back({i, 3 * i - 1, "homomorphic to Gamma_" + std::to_string(i - 1)});
    t.bipartite = {2, 5, "bipartite"};
    t.three_colourable = {10, 29, "3-colourable"};
    t.four_colourable = {1, 3, "4-colourable"};
    return t;
}

namespace {

using nlohmann::json;

json to_json_value(const CandidateRecord& r)
{
    json bounds = json::array();
    for (const auto& b : r.bounds)
        bounds.push_back({{"log", b.is_log}, {"name", b.name}, {"value", b.value}});
    json params = json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    return {{"bounds", bounds},
            {"eliminated_by", r.eliminated_by},
            {"family", family_name(r.family)},
            {"params", params},
            {"sizes", r.sizes},
            {"stage", r.stage},
            {"turan", r.turan},
            {"verdict", r.verdict}};
}

std::string join_sizes(const std::vector<int>& sizes)
{
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        s += (i ? "," : "") + std::to_string(sizes[i]);
    return s;
}

std::string join_params(const std::map<std::string, long long>& params)
{
    std::string s;
    for (const auto& [k, v] : params)
        s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
}

std::string join_bounds(const std::vector<NamedBound>& bounds)
{
    std::string s;
    for (const auto& b : bounds)
        s += (s.empty() ? "" : " ") + b.name + (b.is_log ? "~" : "=") + b.value;
    return s;
}

std::string csv_escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}

std::string record_to_json(const CandidateRecord& r)
{
    return to_json_value(r).dump();
}

CandidateRecord record_from_json(std::string_view line)
{
    json j;
    try {
        j = json::parse(line);
        CandidateRecord r;
        r.family = family_from_name(j.at("family").get<std::string>());
        for (const auto& [k, v] : j.at("params").items())
            r.params[k] = v.get<long long>();
        r.sizes = j.at("sizes").get<std::vector<int>>();
        for (const auto& b : j.at("bounds"))
            r.bounds.push_back({b.at("name").get<std::string>(), b.at("value").get<std::string>(), b.at("log").get<bool>()});
        r.stage = j.at("stage").get<std::string>();
        r.verdict = j.at("verdict").get<std::string>();
        r.eliminated_by = j.at("eliminated_by").get<std::string>();
        r.turan = j.at("turan").get<std::string>();
        return r;
    }
    catch (const json::exception& e) {
        throw DomainError(std::string("record json: ") + e.what());
    }
}

std::string records_to_jsonl(const std::vector<CandidateRecord>& rs)
{
    std::string out;
    for (const auto& r : rs)
        out += record_to_json(r) + "\n";
    return out;
}

std::vector<std::string> record_columns()
{
    return {"family", "params", "sizes", "stage", "bounds", "turan", "verdict"};
}

std::vector<std::string> record_cells(const CandidateRecord& r)
{
    return {family_name(r.family), join_params(r.params), join_sizes(r.sizes), r.stage,
            join_bounds(r.bounds), r.turan, r.verdict};
}

std::string records_to_csv(const std::vector<CandidateRecord>& rs)
{
    std::string out;
    const auto cols = record_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& r : rs) {
        const auto cells = record_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += (i ? "," : "") + csv_escape(cells[i]);
        out += "\n";
    }
    return out;
}

std::string records_to_table(const std::vector<CandidateRecord>& rs)
{
    const auto cols = record_columns();
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rs)
        rows.push_back(record_cells(r));
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        width[i] = cols[i].size();
        for (const auto& row : rows)
            width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << "\n";
    };
    line(cols);
    for (const auto& row : rows)
        line(row);
    return out.str();
}

ScreenSummary summarize(const std::vector<CandidateRecord>& rs)
{
    ScreenSummary s;
    s.candidates = rs.size();
    for (const auto& r : rs) {
        if (r.eliminated()) {
            ++s.eliminated;
            if (r.eliminated_by == "exact-count")
                ++s.exact_counted;
            if (r.eliminated_by == "exhaustive")
                ++s.exhaustive;
        }
        else if (r.survivor())
            ++s.survivors;
        else
            ++s.excluded;
    }
    return s;
}

std::string summary_line(const ScreenSummary& s)
{
    std::string out = std::to_string(s.candidates) + " candidates, " + std::to_string(s.eliminated) + " eliminated, "
        + std::to_string(s.survivors) + " survivors";
    if (s.excluded)
        out += ", " + std::to_string(s.excluded) + " excluded";
    if (s.exact_counted)
        out += "; " + std::to_string(s.exact_counted) + " reached exact counting";
    if (s.exhaustive)
        out += "; " + std::to_string(s.exhaustive) + " settled by exhaustive search";
    return out;
}

}

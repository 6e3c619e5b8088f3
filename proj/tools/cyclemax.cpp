#include "cyclemax/bounds.hpp"
#include "cyclemax/cycle_count.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/graph_io.hpp"
#include "cyclemax/parallel.hpp"
#include "cyclemax/permanent.hpp"
#include "cyclemax/records.hpp"
#include "cyclemax/search.hpp"
#include "cyclemax/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace cyclemax;
using nlohmann::json;

namespace {

enum class OutputFormat { table, csv, json };

// Exit codes are part of the interface: scripts rely on them.
constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Options {
    OutputFormat format = OutputFormat::table;
    int threads = 0;
};

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

GraphFormat parse_graph_format(const std::string& s)
{
    if (s == "auto")
        return GraphFormat::automatic;
    if (s == "edgelist")
        return GraphFormat::edge_list;
    if (s == "graph6")
        return GraphFormat::graph6;
    throw DomainError("unknown graph format " + s);
}

TuranConstant parse_constant(const std::string& s)
{
    if (s == "published")
        return TuranConstant::published;
    if (s == "ln-pi")
        return TuranConstant::ln_pi;
    throw DomainError("unknown Turan constant " + s + " (use published or ln-pi)");
}

EdgeBoundForm parse_form(const std::string& s)
{
    if (s == "reduced")
        return EdgeBoundForm::reduced;
    if (s == "full")
        return EdgeBoundForm::full;
    throw DomainError("unknown edge-bound form " + s + " (use reduced or full)");
}

std::vector<int> parse_sizes(const std::string& s)
{
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        try {
            out.push_back(std::stoi(item));
        }
        catch (const std::exception&) {
            throw DomainError("sizes must be a comma-separated list of integers");
        }
    return out;
}

std::string csv_row(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string& c = cells[i];
        out += i ? "," : "";
        if (c.find_first_of(",\"\n") == std::string::npos) {
            out += c;
            continue;
        }
        out += '"';
        for (char ch : c)
            out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        out += '"';
    }
    return out;
}

void print_value(const Options& o, const std::string& kind, const std::string& value, const std::string& note)
{
    switch (o.format) {
    case OutputFormat::table:
        std::cout << value << "\n# " << note << "\n";
        break;
    case OutputFormat::csv:
        std::cout << "kind,value,provenance\n" << kind << "," << value << ",\"" << note << "\"\n";
        break;
    case OutputFormat::json:
        std::cout << json{{"kind", kind}, {"provenance", note}, {"value", value}}.dump() << "\n";
        break;
    }
}

void print_graph(const Graph& g, const std::string& format)
{
    if (format == "graph6")
        std::cout << write_graph6(g) << "\n";
    else if (format == "edgelist")
        std::cout << write_edge_list(g);
    else
        throw DomainError("unknown output graph format " + format);
}

void print_records(const Options& o, const std::vector<CandidateRecord>& rs)
{
    const std::string summary = summary_line(summarize(rs));
    switch (o.format) {
    case OutputFormat::table:
        std::cout << records_to_table(rs) << summary << "\n";
        break;
    case OutputFormat::csv:
        std::cout << records_to_csv(rs);
        std::cerr << summary << "\n";
        break;
    case OutputFormat::json:
        std::cout << records_to_jsonl(rs);
        std::cerr << summary << "\n";
        break;
    }
}

int run_tables(const Options& o)
{
    const auto expected = golden_table_rows();
    const auto actual = compute_table_rows();
    for (const auto& r : actual) {
        const std::string shown = (r.relation == "<=" ? "<=" : "") + r.value;
        switch (o.format) {
        case OutputFormat::table:
            std::cout << r.graph << std::string(r.graph.size() < 12 ? 12 - r.graph.size() : 1, ' ') << r.n << "  "
                      << shown << "  " << r.source << "\n";
            break;
        case OutputFormat::csv:
            std::cout << (&r == &actual.front() ? "graph,n,relation,value,source\n" : "")
                      << csv_row({r.graph, std::to_string(r.n), r.relation, r.value, r.source}) << "\n";
            break;
        case OutputFormat::json:
            std::cout << json{{"graph", r.graph}, {"n", r.n}, {"relation", r.relation}, {"source", r.source}, {"value", r.value}}.dump()
                      << "\n";
            break;
        }
    }
    const auto diffs = diff_tables(expected, actual);
    for (const auto& d : diffs)
        std::cerr << "mismatch " << d.graph << ": expected " << d.expected << ", got " << d.actual << "\n";
    if (!diffs.empty())
        return exit_mismatch;
    std::cerr << actual.size() << " rows match\n";
    return exit_ok;
}

int run_verify(const Options& o, int max_n, bool fast, bool allow_large)
{
    VerifyOptions vo;
    vo.allow_large = allow_large;
    bool ok = true;
    if (o.format == OutputFormat::csv)
        std::cout << "n,graphs,counted,max,turan,maximizers,unique\n";
    for (int n = 4; n <= max_n; ++n) {
        if (n > verify_max_n && !allow_large)
            throw SizeGuardError("exhaustive verification is limited to n <= " + std::to_string(verify_max_n)
                                 + "; pass --allow-large to override");
        vo.fast = fast && n >= 8;
        const VerifyReport r = verify_order(n, vo);
        ok = ok && r.passed();
        const std::string unique = r.unique ? "yes" : "no";
        switch (o.format) {
        case OutputFormat::table:
            std::cout << "n=" << r.n << ": " << r.graphs << " triangle-free graphs, max = " << to_decimal(r.max_cycles)
                      << (r.max_cycles == r.turan ? " = turan" : " != turan " + to_decimal(r.turan))
                      << ", maximizers = " << r.maximizers << ", unique = " << unique << (vo.fast ? " (maximal graphs only)" : "")
                      << "\n";
            break;
        case OutputFormat::csv:
            std::cout << csv_row({std::to_string(r.n), std::to_string(r.graphs), std::to_string(r.counted),
                                  to_decimal(r.max_cycles), to_decimal(r.turan), std::to_string(r.maximizers), unique})
                      << "\n";
            break;
        case OutputFormat::json:
            std::cout << json{{"counted", r.counted},       {"graphs", r.graphs}, {"max", to_decimal(r.max_cycles)},
                              {"maximizers", r.maximizers}, {"n", r.n},           {"turan", to_decimal(r.turan)},
                              {"unique", r.unique}}
                             .dump()
                      << "\n";
            break;
        }
    }
    return ok ? exit_ok : exit_mismatch;
}

int run_near_regular(const Options& o, const std::string& cap_text, const std::string& form)
{
    std::vector<std::pair<std::string, std::optional<Fraction>>> caps;
    if (!cap_text.empty()) {
        const auto slash = cap_text.find('/');
        if (slash == std::string::npos)
            throw DomainError("cap must be a fraction like 3/8");
        caps.emplace_back(cap_text, Fraction{std::stoll(cap_text.substr(0, slash)), std::stoll(cap_text.substr(slash + 1))});
    }
    else {
        caps.emplace_back("none", std::nullopt);
        const auto t = thresholds();
        for (std::size_t k = 1; k + 1 < t.gamma.size(); ++k)
            caps.emplace_back(std::to_string(t.gamma[k].num) + "/" + std::to_string(t.gamma[k].den),
                              Fraction{t.gamma[k].num, t.gamma[k].den});
        caps.emplace_back("10/29", Fraction{10, 29});
        caps.emplace_back("1/3", Fraction{1, 3});
    }
    if (o.format == OutputFormat::csv)
        std::cout << "cap,max_n\n";
    for (const auto& [label, cap] : caps) {
        const int best = near_regular_bound(cap, parse_form(form));
        if (o.format == OutputFormat::table)
            std::cout << "cap " << label << ": n <= " << best << "\n";
        else if (o.format == OutputFormat::csv)
            std::cout << label << "," << best << "\n";
        else
            std::cout << json{{"cap", label}, {"max_n", best}}.dump() << "\n";
    }
    if (o.format == OutputFormat::table)
        std::cout << "precursor: n <= " << near_regular_precursor() << "\n";
    return exit_ok;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Cycle counts and bounds for triangle-free graphs"};
    app.require_subcommand(1);
    Options opts;
    std::string format = "table";
    app.add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--threads", opts.threads, "worker threads (default: all cores)");

    std::string input, input_format = "auto";
    bool by_length = false;
    auto* count = app.add_subcommand("count", "exact number of cycles in a graph");
    count->add_option("input", input, "graph file, or - for stdin");
    count->add_flag("--by-length", by_length, "break the count down by cycle length");
    count->add_option("--input-format", input_format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

    auto* bound = app.add_subcommand("bound", "upper and lower bounds");
    bound->require_subcommand(1);
    int n = 0, p = 0, q = 0, g = 4, gamma = 0, t = 1;
    long long m = 0;
    std::string form = "reduced", constant = "ln-pi", sizes_text, graph_path;
    auto* b_edge = bound->add_subcommand("edge", "floor(Pi(n-1,m) n^2 / 2g)");
    b_edge->add_option("--n", n)->required();
    b_edge->add_option("--m", m)->required();
    b_edge->add_option("--g", g);
    b_edge->add_option("--form", form, "reduced: Pi(n-1,m); full: Pi(n,m)");
    auto* b_edge_log = bound->add_subcommand("edge-log", "log-space edge bound for dense graphs");
    b_edge_log->add_option("--n", n)->required();
    b_edge_log->add_option("--m", m)->required();
    b_edge_log->add_option("--g", g);
    auto* b_hmorph = bound->add_subcommand("hmorph", "floor(q^n ((n/p)!)^p n / 2g)");
    b_hmorph->add_option("--n", n)->required();
    b_hmorph->add_option("--p", p)->required();
    b_hmorph->add_option("--q", q)->required();
    b_hmorph->add_option("--g", g);
    auto* b_hmorph_log = bound->add_subcommand("hmorph-log", "log-space homomorphism bound");
    b_hmorph_log->add_option("--n", n)->required();
    b_hmorph_log->add_option("--p", p)->required();
    b_hmorph_log->add_option("--q", q)->required();
    b_hmorph_log->add_option("--g", g);
    auto* b_perm = bound->add_subcommand("perm", "floor(perm(A + I) / 2)");
    b_perm->add_option("--gamma", gamma, "base graph Gamma_i");
    b_perm->add_option("--t", t, "uniform part size");
    b_perm->add_option("--sizes", sizes_text, "part sizes, comma separated");
    b_perm->add_option("--graph", graph_path, "explicit graph file (dense permanent, n <= 30)");
    auto* b_turan = bound->add_subcommand("turan-exact", "exact c(T(n,2))");
    b_turan->add_option("--n", n)->required();
    auto* b_turan_log = bound->add_subcommand("turan-log", "lower bound on ln c(T(n,2))");
    b_turan_log->add_option("--n", n)->required();
    b_turan_log->add_option("--constant", constant, "ln-pi or published");
    auto* b_pi = bound->add_subcommand("pi", "Pi(n,m), the largest admissible product");
    b_pi->add_option("--n", n)->required();
    b_pi->add_option("--m", m)->required();

    std::string spec_path;
    bool halve = false;
    auto* perm = app.add_subcommand("perm", "permanent of a block matrix given as JSON {p, sizes, h}");
    perm->add_option("input", spec_path, "JSON file, or - for stdin");
    perm->add_flag("--halve", halve, "print floor(perm/2), the cycle bound");

    std::string graph_format = "edgelist";
    int gamma_i = 0;
    auto* gamma_cmd = app.add_subcommand("gamma", "write Gamma_i");
    gamma_cmd->add_option("i", gamma_i)->required();
    gamma_cmd->add_option("--output-format", graph_format)->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* blowup = app.add_subcommand("blowup", "write a blowup of Gamma_i");
    blowup->add_option("--gamma", gamma)->required();
    blowup->add_option("--t", t, "uniform part size");
    blowup->add_option("--sizes", sizes_text, "part sizes, comma separated");
    blowup->add_option("--output-format", graph_format)->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* tables = app.add_subcommand("tables", "regenerate the reference tables and diff them");

    auto* search = app.add_subcommand("search", "elimination pipelines");
    search->require_subcommand(1);
    int max_n = 0;
    bool no_exhaustive = false, fast = false, allow_large = false;
    std::string cap;
    auto* s_rg = search->add_subcommand("regular-gamma", "uniform blowups of Gamma_2..Gamma_9");
    s_rg->add_option("--max-n", max_n);
    s_rg->add_option("--constant", constant);
    s_rg->add_option("--form", form);
    auto* s_rd = search->add_subcommand("regular-degree", "regular (n, delta) pairs below the 3-colour threshold");
    s_rd->add_option("--max-n", max_n);
    s_rd->add_option("--form", form);
    s_rd->add_flag("--no-exhaustive", no_exhaustive, "stop after the edge bound");
    auto* s_nr = search->add_subcommand("near-regular", "largest n allowed by the near-regular program");
    s_nr->add_option("--cap", cap, "extra degree cap as a fraction of n, e.g. 3/8");
    s_nr->add_option("--form", form);
    auto* s_g2 = search->add_subcommand("gtwo", "near-regular blowups of Gamma_2");
    s_g2->add_option("--max-n", max_n);
    s_g2->add_option("--constant", constant);
    s_g2->add_option("--form", form);
    auto* s_verify = search->add_subcommand("verify", "exhaustive check over all triangle-free graphs");
    s_verify->add_option("--max-n", max_n);
    s_verify->add_flag("--fast", fast, "at n = 8 count only maximal triangle-free graphs");
    s_verify->add_flag("--allow-large", allow_large, "lift the n <= 8 guard");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        opts.format = format == "csv" ? OutputFormat::csv : format == "json" ? OutputFormat::json : OutputFormat::table;
        if (opts.threads == 0)
            if (const char* env = std::getenv("CYCLEMAX_THREADS"))
                opts.threads = std::atoi(env);
        set_thread_count(opts.threads);

        if (*count) {
            const Graph graph = read_graph(read_input(input), parse_graph_format(input_format));
            if (!by_length) {
                const std::string c = to_decimal(count_cycles(graph));
                if (opts.format == OutputFormat::json)
                    std::cout << json{{"cycles", c}}.dump() << "\n";
                else if (opts.format == OutputFormat::csv)
                    std::cout << "cycles\n" << c << "\n";
                else
                    std::cout << c << "\n";
                return exit_ok;
            }
            const auto lengths = count_cycles_by_length(graph);
            BigCount total = 0;
            json j = json::object();
            if (opts.format == OutputFormat::csv)
                std::cout << "length,cycles\n";
            for (const auto& [len, c] : lengths) {
                total += c;
                if (opts.format == OutputFormat::table)
                    std::cout << len << " " << to_decimal(c) << "\n";
                else if (opts.format == OutputFormat::csv)
                    std::cout << len << "," << to_decimal(c) << "\n";
                j[std::to_string(len)] = to_decimal(c);
            }
            if (opts.format == OutputFormat::json)
                std::cout << json{{"by_length", j}, {"cycles", to_decimal(total)}}.dump() << "\n";
            else if (opts.format == OutputFormat::csv)
                std::cout << "total," << to_decimal(total) << "\n";
            else
                std::cout << "total " << to_decimal(total) << "\n";
            return exit_ok;
        }

        if (*bound) {
            if (*b_edge) {
                const auto f = parse_form(form);
                print_value(opts, "edge", to_decimal(edge_bound(n, m, g, f)),
                            std::string("edge-count bound floor(Pi(") + (f == EdgeBoundForm::reduced ? "n-1" : "n")
                                + ",m) n^2 / 2g)");
            }
            else if (*b_edge_log) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.9Lf", edge_bound_log(n, m, g).ln_value);
                print_value(opts, "edge-log", buf, "upper bound on ln c(G) from the edge count, alpha = 1 - sqrt(1 - 1/n - 2(m+1)/n^2)");
            }
            else if (*b_hmorph)
                print_value(opts, "hmorph", to_decimal(hmorph_bound(n, p, q, g)),
                            "homomorphism bound floor(q^n ((n/p)!)^p n / 2g)");
            else if (*b_hmorph_log) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.9Lf", hmorph_bound_log(n, p, q, g).ln_value);
                print_value(opts, "hmorph-log", buf, "Stirling upper bound on ln of the homomorphism bound");
            }
            else if (*b_perm) {
                if (!graph_path.empty()) {
                    const Graph graph = read_graph(read_input(graph_path));
                    print_value(opts, "perm", to_decimal(cycle_bound_perm(graph)), "permanent bound floor(perm(A + I) / 2)");
                }
                else {
                    if (gamma < 1)
                        throw DomainError("bound perm needs --gamma i (with --t or --sizes) or --graph FILE");
                    const BlowupSpec spec = sizes_text.empty() ? gamma_blowup_uniform(gamma, t)
                                                               : gamma_blowup(gamma, parse_sizes(sizes_text));
                    print_value(opts, "perm", to_decimal(cycle_bound_blowup(block_spec_from(spec))),
                                "block permanent bound floor(perm(A + I) / 2) over part-size vectors");
                }
            }
            else if (*b_turan)
                print_value(opts, "turan-exact", to_decimal(turan_cycle_count(n)),
                            "exact c(T(n,2)) = sum over k of a!b! / (2k (a-k)! (b-k)!)");
            else if (*b_turan_log) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.9Lf", turan_log_lower(n, parse_constant(constant)).ln_value);
                print_value(opts, "turan-log", buf, "lower bound n ln n - (1 + ln 2) n + constant on ln c(T(n,2))");
            }
            else if (*b_pi)
                print_value(opts, "pi", to_decimal(pi_max_product(n, m).value),
                            "largest product of c_1 >= ... >= c_k, c_i <= n-i, summing to m");
            return exit_ok;
        }

        if (*perm) {
            json j;
            try {
                j = json::parse(read_input(spec_path));
            }
            catch (const json::exception& e) {
                throw DomainError(std::string("block spec json: ") + e.what());
            }
            BlockMatrixSpec spec;
            try {
                spec.sizes = j.at("sizes").get<std::vector<int>>();
                for (const auto& row : j.at("h"))
                    spec.h.push_back(row.get<std::vector<std::uint8_t>>());
                if (j.contains("p") && j.at("p").get<int>() != spec.blocks())
                    throw DomainError("block spec: p does not match the number of sizes");
            }
            catch (const json::exception& e) {
                throw DomainError(std::string("block spec json: ") + e.what());
            }
            const BigCount value = block_permanent(spec);
            print_value(opts, halve ? "cycle-bound" : "permanent", to_decimal(halve ? BigCount(value / 2) : value),
                        halve ? "floor(perm / 2) of the block matrix" : "permanent of the block matrix");
            return exit_ok;
        }

        if (*gamma_cmd) {
            print_graph(make_gamma(gamma_i).graph, graph_format);
            return exit_ok;
        }

        if (*blowup) {
            const BlowupSpec spec = sizes_text.empty() ? gamma_blowup_uniform(gamma, t) : gamma_blowup(gamma, parse_sizes(sizes_text));
            print_graph(make_blowup(spec), graph_format);
            return exit_ok;
        }

        if (*tables)
            return run_tables(opts);

        if (*s_rg) {
            RegularGammaOptions o;
            if (max_n > 0)
                o.max_n = max_n;
            o.cutoff_constant = s_rg->count("--constant") ? parse_constant(constant) : TuranConstant::published;
            o.edge_form = s_rg->count("--form") ? parse_form(form) : EdgeBoundForm::full;
            print_records(opts, regular_gamma_screen(o));
            return exit_ok;
        }
        if (*s_rd) {
            RegularDegreeOptions o;
            if (max_n > 0)
                o.max_n = max_n;
            o.edge_form = parse_form(form);
            o.exhaustive_finish = !no_exhaustive;
            print_records(opts, regular_degree_screen(o));
            return exit_ok;
        }
        if (*s_nr)
            return run_near_regular(opts, cap, s_nr->count("--form") ? form : "full");
        if (*s_g2) {
            GtwoOptions o;
            o.max_n = max_n;
            o.cutoff_constant = s_g2->count("--constant") ? parse_constant(constant) : TuranConstant::published;
            o.edge_form = s_g2->count("--form") ? parse_form(form) : EdgeBoundForm::full;
            print_records(opts, gtwo_blowup_screen(o));
            return exit_ok;
        }
        if (*s_verify)
            return run_verify(opts, max_n > 0 ? max_n : 7, fast, allow_large);
    }
    catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"
#include "tamari/enumeration.hpp"
#include "tamari/involutions.hpp"
#include "tamari/io.hpp"
#include "verify.hpp"

namespace tamari {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputSource {
    std::string input;
    bool use_stdin = false;
};

void add_input(CLI::App* cmd, InputSource& src)
{
    cmd->add_option("--input", src.input, "inline JSON or path to a JSON file");
    cmd->add_flag("--stdin", src.use_stdin, "read JSON from standard input");
}

Json read_input(const InputSource& src, std::istream& in)
{
    if (src.use_stdin == !src.input.empty())
        throw UsageError("exactly one of --input or --stdin is required");
    std::string text;
    if (src.use_stdin) {
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        auto first = src.input.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && src.input[first] == '{') {
            text = src.input;
        } else {
            std::ifstream f(src.input);
            if (!f)
                throw UsageError("cannot open input file " + src.input);
            std::stringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void add_format(CLI::App* cmd, std::string& format)
{
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
}

template <class T>
void emit(std::ostream& out, const T& value, const std::string& format)
{
    if (format == "json")
        out << to_json(value).dump() << '\n';
    else
        out << to_text(value);
}

int print_report(const std::vector<CheckResult>& results, std::ostream& out)
{
    bool all = true;
    out << std::left << std::setw(18) << "check" << std::setw(4) << "n" << std::setw(6) << "ok"
        << "detail\n";
    for (const auto& r : results) {
        all = all && r.ok;
        out << std::left << std::setw(18) << r.name << std::setw(4) << r.n << std::setw(6)
            << (r.ok ? "PASS" : "FAIL") << r.detail << '\n';
    }
    out << (all ? "all checks passed" : "verification FAILED") << '\n';
    return all ? 0 : 1;
}

}

int cli_main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tamari interval-posets, statistics and the rise-contact involution"};
    app.require_subcommand(1);

    int n = 0, m = 1, verify_m = 0, max_n = 5, jobs = 1;
    bool with_stats = false;
    std::string format, suite, render_format;
    InputSource src;

    auto count = app.add_subcommand("count", "evaluate the interval counting formula");
    count->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);
    count->add_option("--m", m, "m parameter")->check(CLI::PositiveNumber);
    add_format(count, format);

    auto enumerate = app.add_subcommand("enumerate", "stream all intervals of a size as JSON lines");
    enumerate->add_option("--n", n, "size")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--m", m, "m parameter")->check(CLI::PositiveNumber);
    enumerate->add_flag("--stats", with_stats, "attach statistics");
    add_format(enumerate, format);

    auto stats = app.add_subcommand("stats", "statistics of an interval-poset");
    add_input(stats, src);
    stats->add_option("--m", m, "m parameter")->check(CLI::PositiveNumber);
    add_format(stats, format);

    auto involute = app.add_subcommand("involute", "apply the rise-contact involution");
    add_input(involute, src);
    involute->add_option("--m", m, "m parameter")->check(CLI::PositiveNumber);
    add_format(involute, format);

    auto compl_cmd = app.add_subcommand("complement", "complement of an interval-poset");
    add_input(compl_cmd, src);
    add_format(compl_cmd, format);

    auto graft = app.add_subcommand("graft-tree", "convert between interval-posets and grafting trees");
    add_input(graft, src);
    add_format(graft, format);

    auto verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember({"classical", "mtamari", "oracles"}));
    verify->add_option("--max-n", max_n, "largest size")->check(CLI::PositiveNumber);
    verify->add_option("--m", verify_m, "m parameter")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto render = app.add_subcommand("render", "draw an interval-poset as graph text");
    add_input(render, src);
    render->add_option("--format", render_format, "dot or tikz")->required()->check(CLI::IsMember({"dot", "tikz"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (format.empty())
        format = *count ? "text" : "json";

    try {
        if (*count) {
            auto value = m_count_formula(n, m);
            if (format == "json")
                out << Json{{"count", value.str()}, {"m", m}, {"n", n}}.dump() << '\n';
            else
                out << value << '\n';
        } else if (*enumerate) {
            IntervalVisitor visit = [&](const IntervalPoset& p) {
                if (format == "json") {
                    Json line = to_json(p);
                    if (with_stats)
                        line = {{"interval", line}, {"stats", to_json(m == 1 ? interval_stats(p) : m_interval_stats(p, m))}};
                    out << line.dump() << '\n';
                } else {
                    out << to_text(p);
                    if (with_stats)
                        out << to_text(m == 1 ? interval_stats(p) : m_interval_stats(p, m));
                    out << '\n';
                }
            };
            if (m == 1)
                for_each_interval(n, visit);
            else
                for_each_m_interval(n, m, visit);
        } else if (*stats) {
            auto p = poset_from_json(read_input(src, in));
            emit(out, m == 1 ? interval_stats(p) : m_interval_stats(p, m), format);
        } else if (*involute) {
            auto p = poset_from_json(read_input(src, in));
            emit(out, m == 1 ? rise_contact(p) : m_rise_contact(p, m), format);
        } else if (*compl_cmd) {
            emit(out, complement(poset_from_json(read_input(src, in))), format);
        } else if (*graft) {
            auto j = read_input(src, in);
            if (j.contains("tree"))
                emit(out, from_grafting_tree(grafting_tree_from_json(j)), format);
            else
                emit(out, to_grafting_tree(poset_from_json(j)), format);
        } else if (*verify) {
            std::vector<CheckResult> results;
            if (suite == "classical")
                results = verify_classical(max_n, jobs);
            else if (suite == "mtamari")
                results = verify_mtamari(max_n, verify_m ? verify_m : 2, jobs);
            else
                results = verify_oracles(max_n, verify_m, jobs);
            return print_report(results, out);
        } else if (*render) {
            auto p = poset_from_json(read_input(src, in));
            out << (render_format == "dot" ? render_dot(p) : render_tikz(p));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}

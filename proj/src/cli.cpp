#include "lotwise/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lotwise/api.hpp"
#include "lotwise/json_io.hpp"
#include "lotwise/render.hpp"

namespace lotwise {

namespace {

double parse_number(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("invalid_number", "values", "not a number: '" + std::string(text) + "'");
    }
    return v;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("unreadable_file", "", "cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return scenario_from_text(ss.str());
}

void print_violations(std::ostream& err, const std::vector<Violation>& violations) {
    for (const auto& v : violations) {
        if (v.severity == Severity::error) {
            err << "invalid " << v.field << ": " << v.message << " [" << v.code << "]\n";
        }
    }
}

struct Options {
    std::string file;
    std::string format = "table";
    std::string axis;
    std::string values;
    std::string range;
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string store;
    std::string static_dir;
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int evaluate(const Options& o) {
        const auto format = output_format(o.format);
        std::vector<Violation> violations;
        const Scenario s = load_valid(o.file, violations, false);
        out_ << render_evaluation(s, recommend(s), violations, format);
        return kExitOk;
    }

    int sweep(const Options& o) {
        const auto format = output_format(o.format);
        const auto axis = parse_sweep_axis(o.axis);
        if (!axis) {
            throw InputError("invalid_axis", "axis",
                             "unknown axis '" + o.axis + "'; valid axes: p, x, days");
        }
        if (o.values.empty() == o.range.empty()) {
            throw InputError("missing_values", "values", "give exactly one of --values or --range");
        }
        SweepSpec spec{*axis, o.values.empty() ? parse_value_range(o.range)
                                               : parse_value_list(o.values)};
        std::vector<Violation> violations;
        const Scenario s = load_valid(o.file, violations);
        out_ << render_sweep(run_sweep(s, spec), format);
        return kExitOk;
    }

    int breakeven(const Options& o) {
        std::vector<Violation> violations;
        const Scenario s = load_valid(o.file, violations);
        out_ << render_breakeven(s, evaluate_target(s));
        return kExitOk;
    }

    int eoq(const Options& o) {
        const auto format = output_format(o.format);
        std::vector<Violation> violations;
        const Scenario s = load_valid(o.file, violations);
        if (!s.annual_demand) {
            throw InputError("missing_field", "annual_demand",
                             "EOQ undefined: scenario has no annual_demand");
        }
        out_ << render_eoq(s, compare_to_eoq(s), format);
        return kExitOk;
    }

    int golden() {
        const std::vector<GoldenFixture> fixtures{golden_fixture(ReferencePiece::a),
                                                  golden_fixture(ReferencePiece::b)};
        out_ << render_golden(fixtures);
        bool consistent = true;
        for (const auto& fx : fixtures) consistent = consistent && fx.consistent();
        return consistent ? kExitOk : kExitValidationFailed;
    }

    int serve(const Options& o) {
        std::string dir = o.store;
        if (dir.empty()) {
            const char* env = std::getenv("LOTWISE_STORE");
            dir = env && *env ? env : "lotwise-store";
        }
        ScenarioStore store(dir);
        ApiService service(store);
        HttpServer server(service, {o.host, o.port, o.static_dir});
        const int port = server.bind();
        if (port < 0) {
            err_ << "cannot listen on " << o.host << ":" << o.port << "\n";
            return kExitInputError;
        }
        err_ << "lotwise serving on http://" << o.host << ":" << port << " (store " << dir
             << ")\n";
        err_.flush();
        server.run();
        return kExitOk;
    }

private:
    static OutputFormat output_format(const std::string& text) {
        const auto f = parse_output_format(text);
        if (!f) {
            throw InputError("invalid_format", "format",
                             "unknown format '" + text + "'; valid: table, csv, json");
        }
        return *f;
    }

    Scenario load_valid(const std::string& path, std::vector<Violation>& violations,
                        bool echo_advisories = true) {
        Scenario s = load_scenario(path);
        violations = validate_scenario(s);
        if (has_errors(violations)) {
            print_violations(err_, violations);
            throw ValidationFailed{};
        }
        for (const auto& v : violations) {
            if (echo_advisories && v.severity == Severity::advisory) err_ << "warning: " << v.message << "\n";
        }
        return s;
    }

public:
    struct ValidationFailed {};

private:
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

std::vector<double> parse_value_list(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_number(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<double> parse_value_range(std::string_view text) {
    const auto dots = text.find("..");
    const auto colon = text.find(':', dots == std::string_view::npos ? 0 : dots);
    if (dots == std::string_view::npos || colon == std::string_view::npos) {
        throw InputError("invalid_range", "range",
                         "range must look like start..end:step, got '" + std::string(text) + "'");
    }
    const double start = parse_number(text.substr(0, dots));
    const double end = parse_number(text.substr(dots + 2, colon - dots - 2));
    const double step = parse_number(text.substr(colon + 1));
    try {
        return expand_range(start, end, step);
    } catch (const DomainError& e) {
        throw InputError("invalid_range", "range", e.what());
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"lotwise: push-or-pull lot sizing for make-to-order production", "lotwise"};
    app.require_subcommand(1);
    Options o;

    auto* evaluate = app.add_subcommand("evaluate", "Recommend pull or push for a scenario file");
    evaluate->add_option("file", o.file, "Scenario JSON file")->required();
    evaluate->add_option("--format", o.format, "table, csv or json");

    auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario across one parameter");
    sweep->add_option("file", o.file, "Scenario JSON file")->required();
    sweep->add_option("--axis", o.axis, "p, x or days")->required();
    sweep->add_option("--values", o.values, "Comma-separated values, e.g. 0.1,0.5,0.9");
    sweep->add_option("--range", o.range, "start..end:step, e.g. 0.1..1.0:0.1");
    sweep->add_option("--format", o.format, "table, csv or json");

    auto* breakeven = app.add_subcommand("breakeven", "Sale probability at which push breaks even");
    breakeven->add_option("file", o.file, "Scenario JSON file")->required();

    auto* eoq = app.add_subcommand("eoq", "Compare the recommendation with the Wilson lot size");
    eoq->add_option("file", o.file, "Scenario JSON file")->required();
    eoq->add_option("--format", o.format, "table, csv or json");

    auto* golden = app.add_subcommand("golden", "Recompute the reference result tables");

    auto* serve = app.add_subcommand("serve", "Run the JSON HTTP service");
    serve->add_option("--port", o.port, "Listening port (default 8080)");
    serve->add_option("--host", o.host, "Listening address (default 127.0.0.1)");
    serve->add_option("--store", o.store, "Scenario store directory (default $LOTWISE_STORE)");
    serve->add_option("--static", o.static_dir, "Directory of static assets served at /");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    Runner runner(out, err);
    try {
        if (*evaluate) return runner.evaluate(o);
        if (*sweep) return runner.sweep(o);
        if (*breakeven) return runner.breakeven(o);
        if (*eoq) return runner.eoq(o);
        if (*golden) return runner.golden();
        if (*serve) return runner.serve(o);
    } catch (const Runner::ValidationFailed&) {
        return kExitValidationFailed;
    } catch (const InputError& e) {
        err << "error: " << e.what();
        if (!e.field().empty() && std::string(e.what()).find(e.field()) == std::string::npos) {
            err << " (" << e.field() << ")";
        }
        err << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const StoreError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace lotwise

// negtype: decide p-negative type, compute gaps and supremal exponents for
// finite semi-metric spaces, glue spaces together and evaluate lower bounds.
//
// Exit codes: 0 success (for `check`: the space has negative type at p),
// 1 `check` found no negative type, 2 bad input or usage.

#include "negtype/errors.hpp"
#include "negtype/json_io.hpp"
#include "negtype/reports.hpp"
#include "negtype/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using negtype::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw negtype::ValidationError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CommonOpts {
    std::string file;
    double p = 1.0;
    double tol = 1e-9;
    double pmax = 8.0;
    double bisect_tol = 1e-6;
    unsigned seed = 0;
    int restarts = 32;
    int cutoff = 12;
    bool json = false;
};

negtype::GapOptions gap_options(const CommonOpts& o) {
    negtype::GapOptions opts;
    opts.seed = o.seed;
    opts.restarts = o.restarts;
    opts.exact_cutoff = o.cutoff;
    opts.type_tol = o.tol;
    return opts;
}

Json envelope(const std::string& command, const std::string& path, const std::string& content,
              const CommonOpts& o, Json result) {
    return Json{{"schema_version", negtype::kReportSchemaVersion},
                {"tool", "negtype"},
                {"version", negtype::kVersion},
                {"command", command},
                {"input", Json{{"path", path}, {"digest", negtype::content_digest(content)}}},
                {"config", Json{{"p", o.p},
                                {"tol", o.tol},
                                {"p_max", o.pmax},
                                {"bisect_tol", o.bisect_tol},
                                {"seed", o.seed},
                                {"restarts", o.restarts},
                                {"exact_cutoff", o.cutoff}}},
                {"result", std::move(result)}};
}

void emit(const Json& report, bool as_json, const std::function<void(const Json&)>& human) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        human(report.at("result"));
}

std::string fraction_or_decimal(const Json& j) {
    if (j.contains("gap_exact"))
        return j.at("gap_exact").get<std::string>() + " (" +
               std::to_string(j.at("gap").get<double>()) + ")";
    return std::to_string(j.at("gap").get<double>());
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_gap_opts) {
    cmd->add_option("file", o.file, "input JSON document")->required();
    cmd->add_flag("--json", o.json, "emit the full JSON report");
    if (with_gap_opts) {
        cmd->add_option("--seed", o.seed, "seed for randomized restarts")
            ->envname("NEGTYPE_SEED");
        cmd->add_option("--restarts", o.restarts, "optimizer restarts per sign pattern");
        cmd->add_option("--cutoff", o.cutoff, "exhaustive sign-pattern cutoff");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-negative type toolkit for finite semi-metric spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", negtype::kVersion);

    CommonOpts o;

    auto* check = app.add_subcommand("check", "decide p-negative type");
    add_common(check, o, false);
    check->add_option("--p", o.p, "exponent p")->capture_default_str();
    check->add_option("--tol", o.tol, "relative eigenvalue tolerance")->capture_default_str();

    auto* gap_cmd = app.add_subcommand("gap", "compute the p-negative type gap");
    add_common(gap_cmd, o, true);
    gap_cmd->add_option("--p", o.p, "exponent p")->capture_default_str();
    gap_cmd->add_option("--tol", o.tol, "relative eigenvalue tolerance for the type verdict")
        ->capture_default_str();

    auto* supremal = app.add_subcommand("supremal", "supremal p-negative type by bisection");
    add_common(supremal, o, false);
    supremal->add_option("--pmax", o.pmax, "upper end of the search interval")
        ->capture_default_str();
    supremal->add_option("--tol", o.bisect_tol, "bisection tolerance")->capture_default_str();

    bool emit_space = false, emit_extremal = false;
    auto* combine = app.add_subcommand("combine", "build a glued space from a plan");
    add_common(combine, o, true);
    combine->add_flag("--emit-space", emit_space, "include the built distance matrix");
    combine->add_flag("--emit-extremal", emit_extremal,
                      "construct the extremal simplex from component witnesses");

    auto* bound = app.add_subcommand("bound", "lower bounds on the supremal p");
    add_common(bound, o, true);
    bound->add_option("--p", o.p, "exponent p")->capture_default_str();

    auto* report = app.add_subcommand("report", "all analyses for a document");
    add_common(report, o, true);
    report->add_option("--p", o.p, "exponent p")->capture_default_str();
    report->add_option("--pmax", o.pmax, "upper end for the supremal search")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string content = read_file(o.file);
        Json doc = negtype::parse_json_text(content);

        if (check->parsed()) {
            auto space = negtype::space_from_json(doc);
            Json result = negtype::check_report(space, o.p, o.tol);
            bool has = result.at("has_negative_type").get<bool>();
            emit(envelope("check", o.file, content, o, result), o.json, [&](const Json& r) {
                std::cout << (has ? "has" : "does not have") << " " << o.p
                          << "-negative type (strict: " << (r.at("strict").get<bool>() ? "yes" : "no")
                          << ", max form value " << r.at("max_form_value").get<double>() << ")\n";
                if (r.contains("violation")) {
                    std::cout << "violating coefficients:";
                    for (const auto& a : r.at("violation")) std::cout << " " << a.get<double>();
                    std::cout << "\n";
                }
            });
            return has ? 0 : 1;
        }
        if (gap_cmd->parsed()) {
            auto space = negtype::space_from_json(doc);
            Json result = negtype::gap_report(space, o.p, gap_options(o));
            emit(envelope("gap", o.file, content, o, result), o.json, [&](const Json& r) {
                std::cout << "gap at p=" << o.p << ": " << fraction_or_decimal(r) << "\n";
                std::cout << "witness: " << r.at("witness").dump() << "\n";
                if (!r.at("negative_type_holds").get<bool>())
                    std::cout << "note: the space does not have " << o.p
                              << "-negative type; the gap is the signed minimum\n";
            });
            return 0;
        }
        if (supremal->parsed()) {
            auto space = negtype::space_from_json(doc);
            Json result = negtype::supremal_report(space, o.pmax, o.bisect_tol);
            emit(envelope("supremal", o.file, content, o, result), o.json, [&](const Json& r) {
                if (r.at("finite").get<bool>())
                    std::cout << "supremal p: " << r.at("supremal_p").get<double>() << " (+/- "
                              << o.bisect_tol << ")\n";
                else
                    std::cout << "supremal p: infinity (negative type holds at p_max=" << o.pmax
                              << ")\n";
            });
            return 0;
        }
        if (combine->parsed()) {
            auto plan = negtype::plan_from_json(doc);
            Json result = negtype::combine_report(plan, gap_options(o), emit_space, emit_extremal);
            emit(envelope("combine", o.file, content, o, result), o.json, [&](const Json& r) {
                std::cout << "built space with " << r.at("points").get<int>() << " points";
                if (!r.at("glue_points").empty()) {
                    std::cout << ", glued at";
                    for (const auto& g : r.at("glue_points"))
                        std::cout << " " << g.get<std::string>();
                }
                std::cout << "\n";
                for (const auto& c : r.at("components"))
                    std::cout << "  component " << c.at("name").get<std::string>() << ": gap "
                              << fraction_or_decimal(c) << "\n";
                if (!r.at("composed_gap").is_null()) {
                    std::cout << "composed gap: ";
                    if (r.contains("composed_gap_exact"))
                        std::cout << r.at("composed_gap_exact").get<std::string>() << " ("
                                  << r.at("composed_gap").get<double>() << ")\n";
                    else
                        std::cout << r.at("composed_gap").get<double>() << "\n";
                }
                if (r.contains("extremal"))
                    std::cout << "extremal simplex: " << r.at("extremal").at("simplex").dump()
                              << "\n";
                if (emit_space) std::cout << r.at("space").dump(2) << "\n";
            });
            return 0;
        }
        if (bound->parsed()) {
            Json result = negtype::bound_report(doc, o.p, gap_options(o));
            emit(envelope("bound", o.file, content, o, result), o.json, [&](const Json& r) {
                if (r.contains("combined")) {
                    const Json& c = r.at("combined");
                    if (c.at("applicable").get<bool>())
                        std::cout << "combined lower bound: " << c.at("lower_bound").get<double>()
                                  << "\n";
                    else
                        std::cout << "combined bound inapplicable: "
                                  << c.at("reason").get<std::string>() << "\n";
                    const Json& d = r.at("direct_on_built");
                    if (d.at("applicable").get<bool>())
                        std::cout << "direct bound on the built space: "
                                  << d.at("lower_bound").get<double>() << "\n";
                } else if (r.at("applicable").get<bool>()) {
                    std::cout << "lower bound on supremal p: " << r.at("lower_bound").get<double>()
                              << " (gap " << fraction_or_decimal(r.at("gap")) << ", scaled diameter "
                              << r.at("scaled_diameter").at("exact").get<std::string>() << ", c(n) "
                              << r.at("c_n").at("exact").get<std::string>() << ")\n";
                } else {
                    std::cout << "bound inapplicable: " << r.at("reason").get<std::string>() << "\n";
                }
            });
            return 0;
        }
        // report
        Json result = negtype::full_report(doc, o.p, o.pmax, o.bisect_tol, gap_options(o));
        emit(envelope("report", o.file, content, o, result), o.json,
             [&](const Json& r) { std::cout << r.dump(2) << "\n"; });
        return 0;
    } catch (const negtype::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

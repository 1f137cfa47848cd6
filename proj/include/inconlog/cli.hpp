#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inconlog/af.hpp"
#include "inconlog/arguments.hpp"
#include "inconlog/bridges.hpp"
#include "inconlog/error.hpp"
#include "inconlog/extensions.hpp"
#include "inconlog/models.hpp"
#include "inconlog/theory.hpp"
#include "inconlog/theory_io.hpp"

namespace inconlog::cli {

/// Exit codes besides the yes(0)/no(1) answers of query subcommands.
enum ExitCode : int { ok = 0, negative = 1, input_error = 2, cap_error = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline ReliabilityTheory load_valid(const std::string& path, const Limits& limits) {
    ReliabilityTheory t = parse_theory(read_file(path));
    auto report = validate(t, limits);
    for (const auto& issue : report.issues)
        if (issue.is_error()) throw InvalidTheory(issue.describe());
    return t;
}

inline void print_sorted(std::ostream& out, std::vector<std::string> lines) {
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l << '\n';
}

inline std::string format_env(const std::set<std::string>& env) {
    std::string s = "{";
    bool first = true;
    for (const auto& a : env) {
        s += (first ? "" : ",") + a;
        first = false;
    }
    return s + "}";
}

} // namespace detail

/// Runs one command line (without the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reasoning with inconsistent premises ordered by reliability", "inconlog"};
    app.require_subcommand(1);

    Limits limits;
    app.add_option("--max-atoms", limits.max_atoms, "Atom cap for exhaustive valuation")
        ->envname("INCONLOG_MAX_ATOMS");
    app.add_option("--max-extensions", limits.max_extensions, "Cap on enumerated linear extensions")
        ->envname("INCONLOG_MAX_EXTENSIONS");
    app.add_option("--mus-budget", limits.mus_budget, "Largest premise count for MUS search")
        ->envname("INCONLOG_MUS_BUDGET");

    std::string file, formula, alpha, beta, output, node;
    bool credulous = false, rule4 = false, show_ignored = false, trace = false, nogoods = false;

    auto* check = app.add_subcommand("check", "Validate a theory file");
    check->add_option("FILE", file)->required();

    auto* extensions = app.add_subcommand("extensions", "List the most reliable consistent premise sets");
    extensions->add_option("FILE", file)->required();

    auto* entails = app.add_subcommand("entails", "Skeptical (or credulous) consequence query");
    entails->add_option("FILE", file)->required();
    entails->add_option("FORMULA", formula)->required();
    entails->add_flag("--credulous", credulous, "True in some instead of every extension");

    auto* models = app.add_subcommand("models", "List preferred models");
    models->add_option("FILE", file)->required();

    auto* conditional_cmd = app.add_subcommand("conditional", "Decide ALPHA |~ BETA");
    conditional_cmd->add_option("FILE", file)->required();
    conditional_cmd->add_option("ALPHA", alpha)->required();
    conditional_cmd->add_option("BETA", beta)->required();

    auto* revise_cmd = app.add_subcommand("revise", "Revise by ALPHA and write the new theory");
    revise_cmd->add_option("FILE", file)->required();
    revise_cmd->add_option("ALPHA", alpha)->required();
    revise_cmd->add_option("-o,--output", output, "Output theory file")->required();

    auto* af = app.add_subcommand("af", "Export the argumentation framework");
    af->add_option("FILE", file)->required();
    af->add_flag("--rule4", rule4, "Undermine every minimal premise and list stable extensions");
    af->add_flag("--show-ignored", show_ignored, "Also list extensions whose induced order is cyclic");

    auto* argue = app.add_subcommand("argue", "Minimal supporting arguments per believed-premise set");
    argue->add_option("FILE", file)->required();
    argue->add_option("FORMULA", formula)->required();
    argue->add_flag("--trace", trace, "Show the argument derivation log per linear extension");

    auto* atms = app.add_subcommand("atms", "ATMS labels or nogoods");
    atms->add_option("FILE", file)->required();
    auto* node_opt = atms->add_option("--node", node, "Node whose label is printed");
    auto* nogood_opt = atms->add_flag("--nogoods", nogoods, "Print the nogoods");
    node_opt->excludes(nogood_opt);
    nogood_opt->excludes(node_opt);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (check->parsed()) {
            ReliabilityTheory t = parse_theory(detail::read_file(file));
            auto report = validate(t, limits);
            if (report.valid()) out << "valid\n";
            for (const auto& issue : report.issues) out << issue.describe() << '\n';
            return report.valid() ? ok : input_error;
        }

        if (atms->parsed()) {
            AtmsProblem p = parse_atms(detail::read_file(file));
            if (nogood_opt->count() > 0) {
                for (const auto& env : atms_nogoods(p, std::nullopt, limits)) out << detail::format_env(env) << '\n';
                return ok;
            }
            if (node_opt->count() == 0) throw UsageError("atms needs --node N or --nogoods");
            for (const auto& env : atms_labels(p, node, std::nullopt, limits)) out << detail::format_env(env) << '\n';
            return ok;
        }

        ReliabilityTheory t = detail::load_valid(file, limits);

        if (extensions->parsed()) {
            auto r = all_extensions(t, limits);
            std::vector<std::string> lines;
            for (const auto& d : r) lines.push_back(t.format(d));
            detail::print_sorted(out, lines);
            out << "(count: " << r.size() << ")\n";
            return ok;
        }

        if (entails->parsed()) {
            Formula goal = parse_formula(formula);
            bool yes = credulous ? credulous_entails(t, goal, limits) : skeptical_entails(t, goal, limits);
            out << (yes ? "yes" : "no") << '\n';
            return yes ? ok : negative;
        }

        if (models->parsed()) {
            std::vector<std::string> lines;
            for (const auto& m : preferred_models(t, limits)) lines.push_back(m.to_string());
            detail::print_sorted(out, lines);
            return ok;
        }

        if (conditional_cmd->parsed()) {
            bool yes = conditional(t, parse_formula(alpha), parse_formula(beta), limits);
            out << (yes ? "yes" : "no") << '\n';
            return yes ? ok : negative;
        }

        if (revise_cmd->parsed()) {
            ReliabilityTheory revised = revise(t, parse_formula(alpha));
            std::ofstream o(output);
            if (!o) throw UsageError("cannot write '" + output + "'");
            o << print_theory(revised);
            return ok;
        }

        if (af->parsed()) {
            if (!rule4) {
                std::optional<TotalOrder> first;
                for_each_linear_extension(t, limits, [&](const TotalOrder& o) {
                    first = o;
                    return false;
                });
                out << export_af(t, linear_framework(t, *first, limits));
                return ok;
            }
            auto framework = partial_framework(t, limits);
            out << export_af(t, framework);
            std::vector<std::string> lines;
            for (const auto& ext : stable_extensions(framework, limits)) {
                PremiseSet undermined = t.none();
                for (auto a : ext.members)
                    if (const auto* u = std::get_if<UnderminingArgument>(&framework.argument(a)))
                        undermined.set(u->victim);
                if (is_ignored(t, framework, ext)) {
                    if (show_ignored) lines.push_back("% ignored undermined=" + t.format(undermined));
                } else {
                    lines.push_back("% stable delta=" + t.format(af_belief_state(t, framework, ext)) +
                                    " undermined=" + t.format(undermined));
                }
            }
            detail::print_sorted(out, lines);
            return ok;
        }

        if (argue->parsed()) {
            Formula goal = parse_formula(formula);
            auto muses = minimal_unsat_subsets(t, limits);
            std::map<std::vector<std::string>, BeliefState> states;
            for_each_linear_extension(t, limits, [&](const TotalOrder& o) {
                if (trace) {
                    std::string ranking;
                    for (const auto& id : o.ids(t)) ranking += (ranking.empty() ? "" : " > ") + id;
                    out << "extension " << ranking << '\n';
                    for (const auto& line : saturation_trace(t, o, limits)) out << "  " << line << '\n';
                }
                BeliefState s = believed_premises(t, undermining_args_linear(muses, o), o);
                states.try_emplace(t.ids(s.delta), s);
                return true;
            });
            for (const auto& [ids, state] : states) {
                out << "Δ = " << t.format(state.delta) << '\n';
                if (!belief_holds(t, state, goal, limits)) {
                    out << "  not believed\n";
                    continue;
                }
                for (const auto& s : supports(t, state, goal, limits)) out << "  " << to_string(t, s) << '\n';
            }
            return ok;
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return cap_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

} // namespace inconlog::cli

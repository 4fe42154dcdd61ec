#include "boolgeo/cli.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "boolgeo/geometry.hpp"
#include "boolgeo/json_io.hpp"
#include "boolgeo/solve.hpp"
#include "boolgeo/stats.hpp"

namespace boolgeo::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class bad_arguments : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Input {
    std::string origin;
    std::string text;
};

struct LoadedSystem {
    std::vector<std::string> variables;
    OrthogonalSystem ortho;
};

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Input> collect_inputs(const RunConfig& cfg, std::istream& in) {
    std::vector<Input> out;
    for (std::size_t i = 0; i < cfg.inline_systems.size(); ++i) {
        out.push_back({"-e #" + std::to_string(i + 1), cfg.inline_systems[i]});
    }
    for (const auto& path : cfg.input_files) {
        std::ifstream file(path);
        if (!file) throw bad_arguments("cannot open '" + path + "'");
        out.push_back({path, read_stream(file)});
    }
    if (out.empty()) out.push_back({"<stdin>", read_stream(in)});
    return out;
}

// JSON input is an already orthogonalised system; anything else is equation text.
LoadedSystem load_system(const Input& input, const Limits& limits) {
    try {
        const auto first = input.text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && input.text[first] == '{') {
            auto ortho = orthogonal_from_json(std::string_view(input.text), limits);
            return {default_variable_names(ortho.n()), std::move(ortho)};
        }
        const System s = parse_system(input.text);
        return {s.variables(), orthogonalize(s, limits)};
    } catch (const parse_error& e) {
        throw parse_error(input.origin + ": " + e.message(), e.line(), e.column());
    }
}

std::string decimal(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

ordered_json big_number(const mpz_class& v) {
    if (v.fits_ulong_p()) return ordered_json(static_cast<std::uint64_t>(v.get_ui()));
    return ordered_json(v.get_str());
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) { return cfg.format.value_or(fallback); }

// ---------------------------------------------------------------------------

int cmd_orthogonalize(const RunConfig& cfg, const LoadedSystem& sys, std::ostream& out) {
    switch (format_or(cfg, OutputFormat::json)) {
        case OutputFormat::json:
            out << to_json_string(sys.ortho) << '\n';
            break;
        case OutputFormat::text:
            out << format_orthogonal(sys.ortho);
            break;
        case OutputFormat::csv:
            out << "alpha,tuple\n";
            for (MintermIndex a : sys.ortho.zeros().indices()) {
                out << a << ",\"" << format_minterm(a, sys.ortho.n()) << "\"\n";
            }
            break;
    }
    return exit_code::ok;
}

int cmd_solve(const RunConfig& cfg, const LoadedSystem& sys, std::ostream& out) {
    const Rank rank(cfg.rank);
    if (cfg.count_only) {
        out << count_solutions(sys.ortho, rank).get_str() << '\n';
        return exit_code::ok;
    }
    const OutputFormat fmt = format_or(cfg, OutputFormat::text);
    const unsigned n = sys.ortho.n();

    std::vector<std::string> columns;
    if (cfg.z_points) {
        for (std::size_t a = 0; a < sys.ortho.minterm_count(); ++a) {
            columns.push_back("z_" + format_minterm(static_cast<MintermIndex>(a), n));
        }
    } else {
        columns = sys.variables;
    }
    if (fmt == OutputFormat::csv) {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << '"' << columns[i] << '"';
        out << '\n';
    }

    ZSolutionStream stream(sys.ortho, rank);
    std::uint64_t emitted = 0;
    while (!cfg.solution_limit || emitted < *cfg.solution_limit) {
        auto z = stream.next();
        if (!z) break;
        std::vector<Element> values = cfg.z_points ? z->values : x_from_z(*z, sys.variables).values;
        switch (fmt) {
            case OutputFormat::text:
                for (std::size_t i = 0; i < values.size(); ++i) {
                    out << (i ? " " : "") << columns[i] << '=' << format_element(values[i]);
                }
                out << '\n';
                break;
            case OutputFormat::json: {
                ordered_json row = ordered_json::object();
                for (std::size_t i = 0; i < values.size(); ++i) row[columns[i]] = values[i].atom_indices();
                out << row.dump() << '\n';
                break;
            }
            case OutputFormat::csv:
                for (std::size_t i = 0; i < values.size(); ++i) {
                    out << (i ? "," : "") << '"' << format_element(values[i]) << '"';
                }
                out << '\n';
                break;
        }
        ++emitted;
    }
    return exit_code::ok;
}

int cmd_decompose(const RunConfig& cfg, const LoadedSystem& sys, std::ostream& out) {
    const Rank rank(cfg.rank);
    const OutputFormat fmt = format_or(cfg, OutputFormat::text);
    if (fmt == OutputFormat::json) {
        const Decomposition d = decompose(sys.ortho, rank, cfg.limits);
        ordered_json doc{{"rank", rank.value()}, {"count", d.components.size()}, {"components", ordered_json::array()}};
        for (const auto& c : d.components) doc["components"].push_back(to_json(c));
        out << doc.dump() << '\n';
        return exit_code::ok;
    }
    ComponentStream stream(sys.ortho, rank);
    if (fmt == OutputFormat::csv) out << "component,B\n";
    std::uint64_t emitted = 0;
    while (!cfg.solution_limit || emitted < *cfg.solution_limit) {
        auto c = stream.next();
        if (!c) break;
        if (fmt == OutputFormat::text) {
            out << to_json_string(*c) << '\n';
        } else {
            out << emitted << ",\"";
            const auto idx = c->zeros().indices();
            for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? " " : "") << idx[i];
            out << "\"\n";
        }
        ++emitted;
    }
    return exit_code::ok;
}

int cmd_classify(const RunConfig& cfg, const LoadedSystem& sys, std::ostream& out, std::ostream& err) {
    const Rank rank(cfg.rank);
    const OutputFormat fmt = format_or(cfg, OutputFormat::text);
    const bool consistent = is_consistent(sys.ortho);

    ordered_json doc = to_json(sys.ortho);
    doc["rank"] = rank.value();
    doc["consistent"] = consistent;
    doc["irreducibility_rank"] = irreducibility_rank(sys.ortho);
    if (consistent) {
        doc["coordinate_rank"] = coordinate_rank(sys.ortho);
        doc["irreducible"] = is_irreducible(sys.ortho, rank);
        doc["components"] = big_number(irr_count(sys.ortho, rank));
    }

    switch (fmt) {
        case OutputFormat::json:
            out << doc.dump() << '\n';
            break;
        case OutputFormat::text:
            out << "consistent: " << (consistent ? "yes" : "no") << '\n';
            if (consistent) out << "coordinate rank: " << doc["coordinate_rank"].get<std::size_t>() << '\n';
            out << "irreducibility rank: " << doc["irreducibility_rank"].get<std::size_t>() << '\n';
            out << "rank: " << rank.value() << '\n';
            if (consistent) {
                out << "irreducible: " << (doc["irreducible"].get<bool>() ? "yes" : "no") << '\n';
                out << "components: " << irr_count(sys.ortho, rank).get_str() << '\n';
            }
            break;
        case OutputFormat::csv:
            out << "consistent,coordinate_rank,irreducibility_rank,rank,irreducible,components\n";
            out << (consistent ? "true" : "false") << ',';
            out << (consistent ? std::to_string(coordinate_rank(sys.ortho)) : std::string()) << ',';
            out << irreducibility_rank(sys.ortho) << ',' << rank.value() << ',';
            if (consistent) {
                out << (is_irreducible(sys.ortho, rank) ? "true" : "false") << ','
                    << irr_count(sys.ortho, rank).get_str();
            } else {
                out << ',';
            }
            out << '\n';
            break;
    }
    if (!consistent) {
        err << "boolgeo: system is inconsistent; coordinate algebra and components are undefined\n";
        return exit_code::inconsistent;
    }
    return exit_code::ok;
}

int cmd_iso(const RunConfig& cfg, const std::vector<LoadedSystem>& systems, std::ostream& out) {
    if (systems.size() != 2) {
        throw bad_arguments("iso needs exactly two systems, got " + std::to_string(systems.size()));
    }
    const auto& first = systems[0].ortho;
    const auto& second = systems[1].ortho;
    const bool iso = are_isomorphic(first, second);
    switch (format_or(cfg, OutputFormat::text)) {
        case OutputFormat::json: {
            ordered_json doc{{"isomorphic", iso},
                             {"first", to_json(first)},
                             {"second", to_json(second)},
                             {"irreducibility_ranks", {irreducibility_rank(first), irreducibility_rank(second)}}};
            out << doc.dump() << '\n';
            break;
        }
        case OutputFormat::text:
            out << "isomorphic: " << (iso ? "yes" : "no") << '\n';
            out << "zero counts: " << first.zero_count() << ' ' << second.zero_count() << '\n';
            out << "irreducibility ranks: " << irreducibility_rank(first) << ' ' << irreducibility_rank(second)
                << '\n';
            break;
        case OutputFormat::csv:
            out << "isomorphic,zeros_first,zeros_second\n";
            out << (iso ? "true" : "false") << ',' << first.zero_count() << ',' << second.zero_count() << '\n';
            break;
    }
    return exit_code::ok;
}

// ---------------------------------------------------------------------------
// stats

struct StatsRow {
    std::string quantity;
    std::uint64_t m = 0;
    std::optional<unsigned> rank;
    ExactRational exact;
    std::optional<double> asymptotic;
    std::optional<double> ratio;
    std::optional<ExactRational> exhaustive;
    std::optional<double> monte_carlo;
};

unsigned power_of_two_exponent(std::uint64_t m, const std::string& what) {
    if (m == 0 || !std::has_single_bit(m)) {
        throw bad_arguments(what + " needs m to be a power of two (m = 2^n), got " + std::to_string(m));
    }
    return static_cast<unsigned>(std::countr_zero(m));
}

std::vector<StatsRow> compute_stats(const RunConfig& cfg) {
    const StatsQuery& q = cfg.stats;
    std::vector<StatsRow> rows;
    for (std::uint64_t m : q.avg_irr_m) {
        const Rank rank(q.avg_irr_rank);
        StatsRow row{"avg-irr", m, rank.value(), avg_irr_closed(m, rank), {}, {}, {}, {}};
        row.asymptotic = asymptotic_irr(m, rank);
        row.ratio = avg_irr_asymptotic_ratio(m, rank);
        if (q.exhaustive) row.exhaustive = avg_irr_exhaustive(power_of_two_exponent(m, "--exhaustive"), rank);
        if (q.samples > 0) {
            row.monte_carlo = monte_carlo(power_of_two_exponent(m, "--samples"), rank, q.samples, cfg.seed).mean_irr_count;
        }
        rows.push_back(std::move(row));
    }
    for (std::uint64_t m : q.avg_ir_m) {
        StatsRow row{"avg-ir", m, std::nullopt, avg_ir_rank(m), {}, {}, {}, {}};
        if (!(row.exact == avg_ir_rank_sum(m))) throw std::logic_error("average IR rank routes disagree");
        if (q.exhaustive) row.exhaustive = avg_ir_rank_exhaustive(power_of_two_exponent(m, "--exhaustive"));
        if (q.samples > 0) {
            row.monte_carlo = monte_carlo(power_of_two_exponent(m, "--samples"), Rank(1), q.samples, cfg.seed).mean_ir_rank;
        }
        rows.push_back(std::move(row));
    }
    for (std::uint64_t m : q.iso_m) {
        StatsRow row{"iso-prob", m, std::nullopt, iso_pair_probability(m), {}, {}, {}, {}};
        row.asymptotic = iso_pair_asymptotic(m);
        row.ratio = row.exact.to_double() / *row.asymptotic;
        if (q.exhaustive) {
            if (m > 12) throw limit_exceeded("--exhaustive pair enumeration needs m <= 12");
            row.exhaustive = iso_pair_enumerated(static_cast<unsigned>(m));
        }
        if (q.samples > 0) {
            row.monte_carlo = monte_carlo(power_of_two_exponent(m, "--samples"), Rank(1), q.samples, cfg.seed).iso_rate;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
    const auto rows = compute_stats(cfg);
    if (rows.empty()) throw bad_arguments("stats needs at least one of --avg-irr, --avg-ir, --iso-prob");
    const auto fmt = format_or(cfg, OutputFormat::text);

    if (fmt == OutputFormat::json) {
        ordered_json doc = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j{{"quantity", r.quantity}, {"m", r.m}};
            if (r.rank) j["r"] = *r.rank;
            j["exact"] = r.exact.to_string();
            j["decimal"] = r.exact.to_double();
            if (r.asymptotic) j["asymptotic"] = *r.asymptotic;
            if (r.ratio) j["ratio"] = *r.ratio;
            if (r.exhaustive) j["exhaustive"] = r.exhaustive->to_string();
            if (r.monte_carlo) {
                j["monte_carlo"] = {{"estimate", *r.monte_carlo},
                                    {"samples", cfg.stats.samples},
                                    {"seed", cfg.seed},
                                    {"generator", OrthoSampler::generator_name}};
            }
            doc.push_back(std::move(j));
        }
        out << doc.dump() << '\n';
    } else if (fmt == OutputFormat::csv) {
        out << "quantity,m,r,exact,decimal,asymptotic,ratio,exhaustive,monte_carlo\n";
        for (const auto& r : rows) {
            out << r.quantity << ',' << r.m << ',' << (r.rank ? std::to_string(*r.rank) : "") << ','
                << r.exact.to_string() << ',' << decimal(r.exact.to_double()) << ','
                << (r.asymptotic ? decimal(*r.asymptotic) : "") << ',' << (r.ratio ? decimal(*r.ratio) : "") << ','
                << (r.exhaustive ? r.exhaustive->to_string() : "") << ','
                << (r.monte_carlo ? decimal(*r.monte_carlo) : "") << '\n';
        }
    } else {
        const bool label = rows.size() > 1;
        for (const auto& r : rows) {
            if (label) {
                out << r.quantity << " m=" << r.m;
                if (r.rank) out << " r=" << *r.rank;
                out << ": ";
            }
            out << r.exact.to_string() << " (" << decimal(r.exact.to_double()) << ")\n";
            if (r.exhaustive) {
                out << "  exhaustive: " << r.exhaustive->to_string() << " ("
                    << (*r.exhaustive == r.exact ? "matches" : "MISMATCH") << ")\n";
            }
            if (r.monte_carlo) {
                out << "  monte carlo: " << decimal(*r.monte_carlo) << " (" << cfg.stats.samples << " samples, seed "
                    << cfg.seed << ", " << OrthoSampler::generator_name << ")\n";
            }
        }
    }
    return exit_code::ok;
}

}  // namespace

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == Command::stats) return cmd_stats(cfg, out);

        std::vector<LoadedSystem> systems;
        for (const auto& input : collect_inputs(cfg, in)) systems.push_back(load_system(input, cfg.limits));
        if (cfg.command == Command::iso) return cmd_iso(cfg, systems, out);
        if (systems.size() != 1) throw bad_arguments("expected a single system, got " + std::to_string(systems.size()));
        const LoadedSystem& sys = systems.front();

        switch (cfg.command) {
            case Command::orthogonalize: return cmd_orthogonalize(cfg, sys, out);
            case Command::solve: return cmd_solve(cfg, sys, out);
            case Command::decompose: return cmd_decompose(cfg, sys, out);
            case Command::classify: return cmd_classify(cfg, sys, out, err);
            case Command::iso:
            case Command::stats: break;
        }
        return exit_code::bad_arguments;
    } catch (const parse_error& e) {
        err << "boolgeo: parse error at " << e.line() << ':' << e.column() << ": " << e.message() << '\n';
        return exit_code::parse_error;
    } catch (const limit_exceeded& e) {
        err << "boolgeo: limit exceeded: " << e.what() << '\n';
        return exit_code::limit_exceeded;
    } catch (const inconsistent_system& e) {
        err << "boolgeo: inconsistent system: " << e.what() << '\n';
        return exit_code::inconsistent;
    } catch (const std::invalid_argument& e) {
        err << "boolgeo: " << e.what() << '\n';
        return exit_code::bad_arguments;
    } catch (const std::out_of_range& e) {
        err << "boolgeo: " << e.what() << '\n';
        return exit_code::bad_arguments;
    }
}

namespace {

std::vector<std::uint64_t> parse_m_list(const std::string& text, const std::string& flag) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        std::uint64_t v = 0;
        const char* b = text.data() + start;
        const char* e = text.data() + end;
        auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || ptr != e || v == 0) {
            throw bad_arguments(flag + ": expected a positive integer or comma-separated list, got '" + text + "'");
        }
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("-e,--expr", cfg.inline_systems, "System given inline (equations separated by ';')");
    sub->add_option("-f,--file", cfg.input_files, "Read a system from a .beq or orthogonal JSON file")
        ->check(CLI::ExistingFile);
}

}  // namespace

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv(max_vars_env)) {
        unsigned v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
            err << "boolgeo: ignoring invalid " << max_vars_env << "='" << env << "'\n";
        } else {
            cfg.limits.max_vars = v;
        }
    }

    CLI::App app{"Boolean equations over finite boolean algebras: orthogonal form, solving and classification"};
    app.require_subcommand(1);

    std::string format_name;
    std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    std::uint64_t limit = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--max-vars", cfg.limits.max_vars, "Largest accepted variable count")
            ->check(CLI::PositiveNumber);
    };

    auto* ortho_cmd = app.add_subcommand("orthogonalize", "Print the orthogonal zero set A of a system");
    add_input_options(ortho_cmd, cfg);
    common(ortho_cmd);

    auto* solve_cmd = app.add_subcommand("solve", "Enumerate solutions over the algebra of rank r");
    add_input_options(solve_cmd, cfg);
    common(solve_cmd);
    solve_cmd->add_option("--rank,-r", cfg.rank, "Rank of the boolean algebra")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--limit,-k", limit, "Stop after k solutions")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--count", cfg.count_only, "Print the exact number of solutions only");
    solve_cmd->add_flag("--z", cfg.z_points, "Emit points in orthogonal variables");

    auto* decompose_cmd = app.add_subcommand("decompose", "List the irreducible components over rank r");
    add_input_options(decompose_cmd, cfg);
    common(decompose_cmd);
    decompose_cmd->add_option("--rank,-r", cfg.rank, "Rank of the boolean algebra")->check(CLI::PositiveNumber);
    decompose_cmd->add_option("--limit,-k", limit, "Stop after k components")->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "Coordinate rank, irreducibility rank and verdict at rank r");
    add_input_options(classify_cmd, cfg);
    common(classify_cmd);
    classify_cmd->add_option("--rank,-r", cfg.rank, "Rank of the boolean algebra")->check(CLI::PositiveNumber);

    auto* iso_cmd = app.add_subcommand("iso", "Decide whether two algebraic sets are isomorphic");
    add_input_options(iso_cmd, cfg);
    common(iso_cmd);

    auto* stats_cmd = app.add_subcommand("stats", "Exact averages over all orthogonal systems in m variables");
    std::vector<std::string> avg_irr;
    std::string avg_ir;
    std::string iso_prob;
    stats_cmd->add_option("--avg-irr", avg_irr, "Average component count: M R (M may be a comma list)")
        ->expected(2);
    stats_cmd->add_option("--avg-ir", avg_ir, "Average irreducibility rank for M (comma list allowed)");
    stats_cmd->add_option("--iso-prob", iso_prob, "Isomorphic-pair probability for M (comma list allowed)");
    stats_cmd->add_flag("--exhaustive", cfg.stats.exhaustive, "Cross-check by enumerating every system");
    stats_cmd->add_option("--samples", cfg.stats.samples, "Monte Carlo estimate from N sampled pairs");
    stats_cmd->add_option("--seed", cfg.seed, "Seed for the sampler");
    bool csv = false;
    stats_cmd->add_flag("--csv", csv, "Shorthand for --format csv");
    stats_cmd->add_option("--format", format_name, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::bad_arguments;
    }

    try {
        if (ortho_cmd->parsed()) cfg.command = Command::orthogonalize;
        else if (solve_cmd->parsed()) cfg.command = Command::solve;
        else if (decompose_cmd->parsed()) cfg.command = Command::decompose;
        else if (classify_cmd->parsed()) cfg.command = Command::classify;
        else if (iso_cmd->parsed()) cfg.command = Command::iso;
        else cfg.command = Command::stats;

        if (!format_name.empty()) cfg.format = formats.at(format_name);
        if (csv) cfg.format = OutputFormat::csv;
        if (limit > 0) cfg.solution_limit = limit;
        if (!avg_irr.empty()) {
            cfg.stats.avg_irr_m = parse_m_list(avg_irr.at(0), "--avg-irr");
            const auto r = parse_m_list(avg_irr.at(1), "--avg-irr");
            if (r.size() != 1) throw bad_arguments("--avg-irr: rank must be a single integer");
            cfg.stats.avg_irr_rank = static_cast<unsigned>(r.front());
        }
        if (!avg_ir.empty()) cfg.stats.avg_ir_m = parse_m_list(avg_ir, "--avg-ir");
        if (!iso_prob.empty()) cfg.stats.iso_m = parse_m_list(iso_prob, "--iso-prob");
    } catch (const bad_arguments& e) {
        err << "boolgeo: " << e.what() << '\n';
        return exit_code::bad_arguments;
    }
    return cfg;
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    auto parsed = parse_command_line(argc, argv, out, err);
    if (auto* code = std::get_if<int>(&parsed)) return *code;
    return run(std::get<RunConfig>(parsed), in, out, err);
}

}  // namespace boolgeo::cli

#include "frc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "frc/construct.hpp"
#include "frc/io.hpp"
#include "frc/orbit.hpp"
#include "frc/verify.hpp"

namespace frc::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct ParamOptions {
    Parameters params;
    std::uint64_t k = 0;
};

const CLI::Range kPositive(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max(), "POSITIVE");

void add_format(CLI::App& app, Format& format) {
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}))
        ->default_str("text");
}

void add_params(CLI::App& app, ParamOptions& opts) {
    app.add_option("-n,--sets", opts.params.n, "Number of node subsets")->required()->check(kPositive);
    app.add_option("-d,--degree", opts.params.d, "Subset size")->required()->check(kPositive);
    app.add_option("-t,--theta", opts.params.theta, "Number of distinct packets")->required()->check(kPositive);
    app.add_option("-r,--rho", opts.params.rho, "Repetition degree")->required()->check(kPositive);
    app.add_option("-k", opts.k, "Reconstruction degree (recorded, not used)")->check(kPositive);
}

Parameters finish(const CLI::App& app, const ParamOptions& opts) {
    auto params = opts.params;
    if (app.count("-k") > 0) params.k = opts.k;
    return params;
}

int cmd_feasible(const Parameters& params, Format format, std::ostream& out) {
    const auto report = check_feasibility(params);
    if (format == Format::Json) {
        out << io::to_json(report).dump(2) << '\n';
    } else {
        out << io::render_report(report);
    }
    return report.feasible ? kOk : kRejected;
}

int cmd_construct(const Parameters& params, const std::string& out_path, Format format, std::ostream& out,
                  std::ostream& err) {
    const auto report = check_feasibility(params);
    if (!report.feasible) {
        if (format == Format::Json) {
            out << json{{"feasibility", io::to_json(report)}}.dump(2) << '\n';
        } else {
            out << io::render_report(report);
        }
        err << "frc construct: parameters are infeasible; no code written\n";
        return kRejected;
    }

    FrCode code;
    try {
        code = construct(params);
    } catch (const std::exception& e) {
        err << "frc construct: " << e.what() << '\n';
        return kRejected;
    }
    const auto verification = verify(code);
    if (!verification.valid) {
        err << "frc construct: constructed code failed verification; no code written\n"
            << io::render_report(verification);
        return kRejected;
    }

    if (out_path.empty()) {
        if (format == Format::Json) {
            out << json{{"feasibility", io::to_json(report)},
                        {"code", io::to_json(code)},
                        {"verification", io::to_json(verification)}}
                       .dump(2)
                << '\n';
        } else {
            out << io::render_code(code);
        }
        return kOk;
    }

    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (file) file << io::render_code(code);
    if (!file || !file.flush()) {
        err << "frc construct: cannot write " << out_path << '\n';
        return kIoError;
    }
    if (format == Format::Json) {
        out << json{{"feasibility", io::to_json(report)},
                    {"verification", io::to_json(verification)},
                    {"out", out_path}}
                   .dump(2)
            << '\n';
    } else {
        out << io::render_report(report) << io::render_report(verification) << "wrote " << out_path << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& path, Format format, std::ostream& out, std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "frc verify: cannot read " << path << '\n';
        return kIoError;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    io::CodeDocument doc;
    try {
        doc = io::parse_code(buffer.str());
    } catch (const io::ParseError& e) {
        if (format == Format::Json) {
            out << json{{"error", std::string(io::to_string(e.kind()))}, {"line", e.line()}, {"message", e.what()}}
                       .dump(2)
                << '\n';
        }
        err << "frc verify: " << path << ": " << e.what() << '\n';
        return kUsage;
    }

    const auto report = verify(doc.to_code());
    if (format == Format::Json) {
        out << json{{"params", io::to_json(doc.header)}, {"verification", io::to_json(report)}}.dump(2) << '\n';
    } else {
        out << io::render_report(report);
    }
    return report.valid ? kOk : kRejected;
}

int cmd_orbits(std::uint64_t d, std::uint64_t theta, std::optional<std::uint64_t> limit, Format format,
               std::ostream& out, std::ostream& err) {
    if (d > theta || theta > std::numeric_limits<std::uint32_t>::max()) {
        err << "frc orbits: requires d <= theta\n";
        return kUsage;
    }
    OrbitEnumerator orbits(static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(theta));
    std::uint64_t count = 0;
    std::uint64_t subsets = 0;
    json listing = json::array();
    while (!limit || count < *limit) {
        auto next = orbits.next();
        if (!next) break;
        ++count;
        subsets += next->size;
        if (format == Format::Json) {
            listing.push_back(io::to_json(*next));
        } else {
            out << "orbit canonical=" << next->canonical.to_string() << " size=" << next->size
                << " balance=" << next->balance() << '\n';
        }
    }
    if (format == Format::Json) {
        out << json{{"d", d}, {"theta", theta}, {"orbits", listing}, {"count", count}, {"subsets", subsets}}.dump(2)
            << '\n';
    } else {
        out << "orbits=" << count << " subsets=" << subsets << '\n';
    }
    return kOk;
}

enum class SweepMode { Feasibility, ConstructAndVerify };

struct SweepRow {
    FeasibilityReport report;
    std::optional<bool> verified;
    std::string error;
};

unsigned sweep_threads() {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FRC_THREADS")) {
        char* end = nullptr;
        const auto cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1) threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
    }
    return threads;
}

SweepRow evaluate(const Parameters& params, SweepMode mode) {
    SweepRow row{check_feasibility(params), std::nullopt, {}};
    if (mode != SweepMode::ConstructAndVerify || !row.report.feasible) return row;
    try {
        row.verified = verify(construct(params)).valid;
    } catch (const std::exception& e) {
        row.verified = false;
        row.error = e.what();
    }
    return row;
}

int cmd_sweep(std::uint64_t theta_min, std::uint64_t theta_max, std::uint64_t d_min, std::optional<std::uint64_t> d_max,
              std::uint64_t n_cap, SweepMode mode, Format format, std::ostream& out, std::ostream& err) {
    std::vector<Parameters> grid;
    for (auto theta = theta_min; theta <= theta_max; ++theta) {
        const auto d_hi = std::min(theta, d_max.value_or(theta));
        for (auto d = d_min; d <= d_hi; ++d) {
            for (std::uint64_t n = 1; n <= n_cap; ++n) {
                if ((n * d) % theta == 0) grid.push_back({n, d, theta, n * d / theta, std::nullopt});
            }
        }
    }
    if (grid.empty()) {
        err << "frc sweep: the requested ranges contain no grid points\n";
        return kUsage;
    }

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> cursor{0};
    {
        const auto workers = std::min<std::size_t>(sweep_threads(), grid.size());
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (auto i = cursor++; i < grid.size(); i = cursor++) rows[i] = evaluate(grid[i], mode);
            });
        }
    }

    std::uint64_t feasible = 0, verified = 0, failures = 0;
    json listing = json::array();
    for (const auto& row : rows) {
        const auto& r = row.report;
        const auto& p = r.params;
        feasible += r.feasible;
        if (row.verified) (*row.verified ? verified : failures) += 1;
        if (format == Format::Json) {
            json entry{{"theta", p.theta}, {"d", p.d},           {"n", p.n},
                       {"rho", p.rho},     {"feasible", r.feasible}, {"balance_ok", r.balance_ok},
                       {"capacity_ok", r.capacity_ok}, {"omega", r.omega_pair.omega}};
            entry["verified"] = row.verified ? json(*row.verified) : json(nullptr);
            if (!row.error.empty()) entry["error"] = row.error;
            listing.push_back(std::move(entry));
        } else {
            out << "theta=" << p.theta << " d=" << p.d << " n=" << p.n << " rho=" << p.rho
                << " feasible=" << (r.feasible ? "true" : "false")
                << " balance_ok=" << (r.balance_ok ? "true" : "false")
                << " capacity_ok=" << (r.capacity_ok ? "true" : "false") << " omega=" << r.omega_pair.omega
                << " verified=" << (row.verified ? (*row.verified ? "true" : "false") : "-") << '\n';
            if (!row.error.empty()) err << "frc sweep: " << row.error << '\n';
        }
    }
    const std::uint64_t points = rows.size();
    if (format == Format::Json) {
        out << json{{"rows", listing},
                    {"summary",
                     {{"points", points},
                      {"feasible", feasible},
                      {"infeasible", points - feasible},
                      {"verified", verified},
                      {"failures", failures}}}}
                   .dump(2)
            << '\n';
    } else {
        out << "summary points=" << points << " feasible=" << feasible << " infeasible=" << points - feasible
            << " verified=" << verified << " failures=" << failures << '\n';
    }
    return failures == 0 ? kOk : kRejected;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional repetition code construction and verification"};
    app.require_subcommand(1);

    Format format = Format::Text;

    auto* feasible = app.add_subcommand("feasible", "Check whether (n, d, theta, rho) admits an FR code");
    ParamOptions feasible_opts;
    add_params(*feasible, feasible_opts);
    add_format(*feasible, format);

    auto* construct_cmd = app.add_subcommand("construct", "Build an FR code and write it in frc v1 format");
    ParamOptions construct_opts;
    std::string out_path;
    add_params(*construct_cmd, construct_opts);
    construct_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");
    add_format(*construct_cmd, format);

    auto* verify_cmd = app.add_subcommand("verify", "Verify an frc v1 code file");
    std::string in_path;
    verify_cmd->add_option("path", in_path, "Code file")->required();
    add_format(*verify_cmd, format);

    auto* orbits = app.add_subcommand("orbits", "List cyclic-shift orbits of d-subsets");
    std::uint64_t orbit_d = 0, orbit_theta = 0;
    std::optional<std::uint64_t> limit;
    orbits->add_option("-d,--degree", orbit_d, "Subset size")->required()->check(kPositive);
    orbits->add_option("-t,--theta", orbit_theta, "Ground set size")->required()->check(kPositive);
    orbits->add_option("--limit", limit, "Stop after this many orbits")->check(kPositive);
    add_format(*orbits, format);

    auto* sweep = app.add_subcommand("sweep", "Feasibility / construction table over a parameter grid");
    std::uint64_t theta_min = 1, theta_max = 0, d_min = 1, n_cap = 50;
    std::optional<std::uint64_t> d_max;
    SweepMode mode = SweepMode::ConstructAndVerify;
    sweep->add_option("--theta-min", theta_min, "Smallest theta")->check(kPositive);
    sweep->add_option("--theta-max", theta_max, "Largest theta")->required()->check(kPositive);
    sweep->add_option("--d-min", d_min, "Smallest d")->check(kPositive);
    sweep->add_option("--d-max", d_max, "Largest d (defaults to theta)")->check(kPositive);
    sweep->add_option("--n-cap", n_cap, "Largest n")->check(kPositive);
    sweep->add_option("--mode", mode, "feasibility or construct-and-verify")
        ->transform(CLI::CheckedTransformer(std::map<std::string, SweepMode>{
            {"feasibility", SweepMode::Feasibility}, {"construct-and-verify", SweepMode::ConstructAndVerify}}));
    add_format(*sweep, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*feasible) return cmd_feasible(finish(*feasible, feasible_opts), format, out);
        if (*construct_cmd) return cmd_construct(finish(*construct_cmd, construct_opts), out_path, format, out, err);
        if (*verify_cmd) return cmd_verify(in_path, format, out, err);
        if (*orbits) return cmd_orbits(orbit_d, orbit_theta, limit, format, out, err);
        if (*sweep) {
            if (theta_min > theta_max || (d_max && d_min > *d_max)) {
                err << "frc sweep: empty range\n";
                return kUsage;
            }
            return cmd_sweep(theta_min, theta_max, d_min, d_max, n_cap, mode, format, out, err);
        }
    } catch (const std::bad_alloc&) {
        err << "frc: out of memory\n";
        return kIoError;
    } catch (const std::exception& e) {
        err << "frc: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace frc::cli

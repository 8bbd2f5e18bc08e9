// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "frc/cli.hpp"
#include "frc/construct.hpp"
#include "frc/io.hpp"
#include "frc/oracle.hpp"
#include "frc/orbit.hpp"
#include "frc/tail_family.hpp"
#include "frc/verify.hpp"

using namespace frc;

namespace {

namespace fs = std::filesystem;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::vector<std::uint64_t> occurrences(const FrCode& code) {
    std::vector<std::uint64_t> counts(code.params.theta + 1, 0);
    for (const auto& s : code.sets) {
        for (const auto x : s.elements()) ++counts[x];
    }
    return counts;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "frc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

Outcome golden(const Parameters& p, std::uint64_t omega, std::optional<std::uint64_t> a) {
    Outcome o;
    const auto report = check_feasibility(p);
    if (!report.feasible) o.fail("reported infeasible");
    if (report.omega_pair.omega != omega) o.fail("omega=" + std::to_string(report.omega_pair.omega));
    if (a && report.omega_pair.a != *a) o.fail("a=" + std::to_string(report.omega_pair.a));
    const auto code = construct(p);
    if (code.sets.size() != p.n) o.fail("wrong set count");
    if (!verify(code).valid) o.fail("verify rejected the code");
    const auto counts = occurrences(code);
    for (std::uint64_t x = 1; x <= p.theta; ++x) {
        if (counts[x] != p.rho) o.fail("element " + std::to_string(x) + " occurs " + std::to_string(counts[x]) + " times");
    }
    return o;
}

Outcome orbit_lemmas() {
    Outcome o;
    std::uint64_t checked = 0;
    for (std::uint32_t theta = 1; theta <= 12; ++theta) {
        for (std::uint32_t d = 1; d <= theta; ++d) {
            const auto omega = smallest_multiplier(d, theta).omega;
            for (std::uint64_t mask = 0; mask < (1ULL << theta); ++mask) {
                if (static_cast<std::uint32_t>(__builtin_popcountll(mask)) != d) continue;
                std::vector<Residue> r;
                for (std::uint32_t x = 0; x < theta; ++x) {
                    if (mask >> x & 1) r.push_back(x);
                }
                const auto orb = orbit(Subset::from_residues(theta, r));
                ++checked;
                if (theta % orb.size != 0) o.fail("#[A] does not divide theta");
                if (orb.size % omega != 0) o.fail("omega does not divide #[A]");
                std::vector<std::uint64_t> counts(theta, 0);
                for (const auto& m : orb.members) {
                    for (const auto x : m.residues()) ++counts[x];
                }
                for (const auto c : counts) {
                    if (c * theta != std::uint64_t{d} * orb.size) o.fail("uneven element count in an orbit");
                }
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " subsets";
    return o;
}

Outcome sufficiency() {
    Outcome o;
    std::uint64_t points = 0;
    for (std::uint64_t theta = 1; theta <= 10; ++theta) {
        for (std::uint64_t d = 1; d <= theta; ++d) {
            for (std::uint64_t n = 1; n <= 200 && binomial_at_least(theta, d, n); ++n) {
                if (n * d % theta != 0) continue;
                const Parameters p{n, d, theta, n * d / theta, std::nullopt};
                ++points;
                try {
                    if (!verify(construct(p)).valid) o.fail("invalid code at " + io::render_header(p));
                } catch (const std::exception& e) {
                    o.fail(io::render_header(p) + ": " + e.what());
                }
            }
        }
    }
    if (o.ok) o.detail = std::to_string(points) + " points";
    return o;
}

Outcome equivalence() {
    Outcome o;
    CrosscheckOptions options;
    options.off_balance = true;
    // n_cap above C(6,3) + 1 so every n <= C(theta, d) + 1 is reached.
    const auto result = theorem_crosscheck(6, 1000, options);
    for (const auto& d : result.discrepancies) o.fail(io::render_header(d.params) + ": " + d.what);
    for (const auto& s : result.skipped) o.fail("oracle budget exhausted at " + io::render_header(s));
    if (o.ok) {
        o.detail = std::to_string(result.points) + " points, " + std::to_string(result.feasible_points) + " feasible";
    }
    return o;
}

Outcome tail_partition() {
    Outcome o;
    for (std::uint32_t theta = 2; theta <= 64; ++theta) {
        for (std::uint32_t d = 1; d < theta; ++d) {
            const auto tail = tail_family(d, theta);
            const auto a = std::uint64_t{d} * tail.omega / theta;
            std::map<std::vector<Residue>, int> seen;
            for (const auto& family : tail.families) {
                std::vector<std::uint64_t> counts(theta, 0);
                for (const auto& m : family) {
                    seen[{m.residues().begin(), m.residues().end()}]++;
                    for (const auto x : m.residues()) ++counts[x];
                }
                if (std::any_of(counts.begin(), counts.end(), [&](auto c) { return c != a; })) {
                    o.fail("uneven family at d=" + std::to_string(d) + " theta=" + std::to_string(theta));
                }
            }
            std::map<std::vector<Residue>, int> expected;
            for (const auto& m : orbit(Subset::prefix(theta, d)).members) {
                expected[{m.residues().begin(), m.residues().end()}]++;
            }
            if (seen != expected) o.fail("families do not partition [S] at d=" + std::to_string(d) +
                                         " theta=" + std::to_string(theta));
        }
    }
    return o;
}

Outcome round_trip(const fs::path& dir) {
    Outcome o;
    std::mt19937_64 rng(0x5eed);
    int produced = 0;
    while (produced < 1000) {
        const auto theta = 1 + rng() % 12;
        const auto d = 1 + rng() % theta;
        const auto n = 1 + rng() % 300;
        if (n * d % theta != 0 || !binomial_at_least(theta, d, n)) continue;
        Parameters p{n, d, theta, n * d / theta, std::nullopt};
        if (rng() % 3 == 0) p.k = 1 + rng() % 20;
        auto code = construct(p);
        // Relabel and reorder; still a valid code, just not the constructor's.
        const auto offset = static_cast<std::int64_t>(rng() % theta);
        for (auto& s : code.sets) s = shift(s, offset);
        std::shuffle(code.sets.begin(), code.sets.end(), rng);
        if (!verify(code).valid) o.fail("generated code invalid");
        const auto text = io::render_code(code);
        const auto again = io::render_code(io::parse_code(text).to_code());
        if (again != text) o.fail("render->parse->render changed " + io::render_header(p));
        ++produced;
    }

    const std::vector<std::vector<std::string>> cases = {
        {"12", "6", "8", "9"}, {"21", "3", "7", "9"}, {"1", "4", "4", "1"},
        {"70", "4", "8", "35"}, {"30", "5", "10", "15"}, {"2000", "7", "1000", "14"},
    };
    for (const auto& c : cases) {
        const auto path = dir / ("rt_" + c[0] + "_" + c[1] + "_" + c[2] + ".frc");
        if (cli({"construct", "-n", c[0], "-d", c[1], "-t", c[2], "-r", c[3], "--out", path.string()}) != 0) {
            o.fail("cmd_construct failed for n=" + c[0]);
        } else if (cli({"verify", path.string()}) != 0) {
            o.fail("cmd_verify rejected " + path.filename().string());
        }
    }
    if (o.ok) o.detail = std::to_string(produced) + " codes, " + std::to_string(cases.size()) + " CLI files";
    return o;
}

Outcome determinism(const fs::path& dir) {
    Outcome o;
    const std::string binary = FRC_BINARY;
    std::vector<fs::path> runs = {dir / "run_a", dir / "run_b"};
    const std::vector<std::string> thread_env = {"FRC_THREADS=1", "FRC_THREADS=4"};
    for (std::size_t i = 0; i < runs.size(); ++i) {
        fs::remove_all(runs[i]);
        fs::create_directories(runs[i]);
        const auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };
        const std::string env = thread_env[i] + " ";
        const std::string cmds[] = {
            env + q(binary) + " construct -n 12 -d 6 -t 8 -r 9 --out " + q(runs[i] / "example_1_1.frc") + " > /dev/null",
            env + q(binary) + " construct -n 21 -d 3 -t 7 -r 9 --out " + q(runs[i] / "example_1_2.frc") + " > /dev/null",
            env + q(binary) + " sweep --theta-max 8 --n-cap 70 > " + q(runs[i] / "sweep.txt"),
        };
        for (const auto& cmd : cmds) {
            if (std::system(cmd.c_str()) != 0) o.fail("command failed: " + cmd);
        }
    }
    for (const auto* name : {"example_1_1.frc", "example_1_2.frc", "sweep.txt"}) {
        const auto a = slurp(runs[0] / name);
        const auto b = slurp(runs[1] / name);
        if (a.empty()) o.fail(std::string(name) + " is empty");
        if (a != b) o.fail(std::string(name) + " differs between runs");
    }
    return o;
}

}  // namespace

int main() {
    constexpr double kNoLimit = std::numeric_limits<double>::infinity();
    const fs::path dir = fs::path(FRC_TEST_TMPDIR) / "acceptance_out";
    fs::create_directories(dir);

    struct Criterion {
        int id;
        std::string name;
        double limit_seconds;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden (n=12, d=6, theta=8, rho=9): omega=4 a=3, every element 9 times", 1.0,
         [] { return golden({12, 6, 8, 9, std::nullopt}, 4, 3); }},
        {2, "golden (n=21, d=3, theta=7, rho=9): omega=7, every element 9 times", 1.0,
         [] { return golden({21, 3, 7, 9, std::nullopt}, 7, std::nullopt); }},
        {3, "orbit lemmas for all d-subsets, theta <= 12", 120.0, orbit_lemmas},
        {4, "construct + verify for theta <= 10, n <= min(C(theta,d), 200)", 300.0, sufficiency},
        {5, "oracle existence <=> feasibility <=> construct, theta <= 6", 300.0, equivalence},
        {6, "tail families partition [S], 1 <= d < theta <= 64", 30.0, tail_partition},
        {7, "1000 random codes round trip; CLI files re-verify", kNoLimit, [&] { return round_trip(dir); }},
        {8, "two independent runs produce byte-identical files", kNoLimit, [&] { return determinism(dir); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.limit_seconds) {
            outcome.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        }
        if (!outcome.ok) ++failed;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  ["
                  << seconds << " s]";
        if (!outcome.detail.empty()) std::cout << "  " << outcome.detail;
        std::cout << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

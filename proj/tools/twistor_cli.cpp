#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "twistor/analysis.hpp"
#include "twistor/errors.hpp"
#include "twistor/json_io.hpp"
#include "twistor/linsys.hpp"
#include "twistor/plucker.hpp"
#include "twistor/twistor_core.hpp"

#ifndef TWISTOR_VERSION
#define TWISTOR_VERSION "dev"
#endif

using namespace twistor;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kRefusal = 3, kInternal = 4 };

std::uint64_t default_seed() {
    const char* env = std::getenv("TWISTOR_SEED");
    if (!env || !*env) return 1;
    std::string s(env);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw InvalidInput("TWISTOR_SEED is not an unsigned integer: " + s);
    }
    if (used != s.size()) throw InvalidInput("TWISTOR_SEED is not an unsigned integer: " + s);
    return v;
}

struct Run {
    std::string command;
    std::uint64_t seed = 0;
    json tolerances = json::object();
    std::string input;
    std::string output;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    json manifest() const {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json paths = json::object();
        if (!input.empty()) paths["input"] = input;
        paths["output"] = output.empty() ? "-" : output;
        return {{"command", command},
                {"seed", seed},
                {"tolerances", tolerances},
                {"paths", paths},
                {"timing", {{"seconds", secs}}},
                {"version", TWISTOR_VERSION}};
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

void emit(json doc, const Run& run) {
    doc["manifest"] = run.manifest();
    emit(doc.dump(2) + "\n", run.output);
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

GaussianRational literal(const std::string& flag, const std::string& text) {
    try {
        return GaussianRational::parse(text);
    } catch (const InvalidInput& e) {
        throw InvalidInput(flag + ": " + e.what());
    }
}

std::string joined(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

// fiber ----------------------------------------------------------------------

int cmd_fiber(const std::string& q1s, const std::string& q2s, Run& run) {
    Quaternion q(literal("--q1", q1s), literal("--q2", q2s));
    ExactLine line = twistor_fiber(q);
    ExactPlucker t = plucker_of(line);
    if (!is_twistor(t)) throw InvariantViolation("fiber failed the twistor test");
    bool same = pi_project(line.a()) == pi_project(line.b());
    if (!same) throw InvariantViolation("spanning points of the fiber project apart");
    json doc = {{"q", io::quaternion_to_json(q)},
                {"line", io::line_to_json(line)},
                {"plucker", io::plucker_to_json(t)},
                {"is_twistor", true}};
    emit(std::move(doc), run);
    return kOk;
}

// nu -------------------------------------------------------------------------

int cmd_nu(int max_d, const std::string& format, Run& run) {
    if (max_d < 1) throw InvalidInput("--max-d must be at least 1");
    json rows = json::array();
    for (int d = 1; d <= max_d; ++d) {
        std::int64_t v = nu(d), cf = nu_closed_form(d);
        rows.push_back({{"d", d},
                        {"nu", v},
                        {"nu_n", nu(NuKind::Normal, d)},
                        {"nu_s", nu(NuKind::Smooth, d)},
                        {"nu_j", nu(NuKind::JInvariant, d)},
                        {"closed_form", cf},
                        {"closed_form_ok", v == cf}});
    }
    if (format == "json") {
        emit(json{{"rows", rows}}, run);
        return kOk;
    }
    std::ostringstream out;
    out << "# manifest " << run.manifest().dump() << "\n";
    out << "d,nu,nu_n,nu_s,nu_j,closed_form,closed_form_ok\n";
    for (const auto& r : rows)
        out << r["d"] << ',' << r["nu"] << ',' << r["nu_n"] << ',' << r["nu_s"] << ',' << r["nu_j"] << ','
            << r["closed_form"] << ',' << (r["closed_form_ok"].get<bool>() ? "yes" : "no") << "\n";
    emit(out.str(), run.output);
    return kOk;
}

// build ----------------------------------------------------------------------

struct BuildArgs {
    int k = 0;
    int d = 0;
    bool j_invariant = false;
    std::int64_t height = 10;
};

// The even-h0 obstruction: with E the k fibers, dim |I_E(d)| is
// C(d+3,3) - k(d+1) - 1 for general fibers and must be even.
void check_parity(const BuildArgs& a) {
    std::ostringstream why;
    if (a.d % 2 != 0) {
        why << "--j-invariant needs even d: for f of degree " << a.d
            << ", j(j(f)) = (-1)^d f = -f, so j(f) = c f would force |c|^2 = -1";
        throw MathRefusal(why.str());
    }
    std::int64_t n = binomial(a.d + 3, 3);
    std::int64_t dim = n - static_cast<std::int64_t>(a.k) * (a.d + 1) - 1;
    bool ok = (a.d % 4 == 2) ? (a.k % 2 == 1) : (a.k % 2 == 0);
    if (!ok) {
        why << "--j-invariant parity: d = " << a.d << " = " << a.d % 4 << " mod 4 needs k "
            << (a.d % 4 == 2 ? "odd" : "even") << ", got k = " << a.k << "; C(" << a.d + 3 << ",3) - k(d+1) - 1 = " << n
            << " - " << static_cast<std::int64_t>(a.k) * (a.d + 1) << " - 1 = " << dim << " is odd";
        throw MathRefusal(why.str());
    }
}

int cmd_build(const BuildArgs& a, Run& run) {
    if (a.k < 1) throw InvalidInput("--k must be at least 1");
    if (a.d < 1) throw InvalidInput("--d must be at least 1");
    if (a.height < 1) throw InvalidInput("--height must be at least 1");
    if (a.j_invariant) check_parity(a);

    Configuration config;
    config.lines = sample_twistor_lines(a.k, run.seed, a.height);
    config.validate();

    ExactForm f;
    CohomologyReport report;
    json jinfo = json::object();
    if (a.j_invariant) {
        report = cohomology(config, a.d);
        if (report.h0 == 0)
            throw MathRefusal("h0 = 0 for " + std::to_string(a.k) + " general twistor fibers in degree " +
                              std::to_string(a.d) + " (rank " + std::to_string(report.rank) + " of " +
                              std::to_string(report.cols) + " columns)");
        JInvariantMember m = j_invariant_member(config, a.d, run.seed, JStrategy::Auto, a.height);
        f = std::move(m.form);
        json added = json::array();
        for (const auto& p : m.added_points) added.push_back(io::point_to_json(p));
        jinfo = {{"strategy", m.strategy == JStrategy::Augment ? "augment" : "symmetrize"},
                 {"initial_h0", m.initial_h0},
                 {"added_points", added}};
    } else {
        LinearSystem sys = linear_system(config, a.d);
        report = sys.report;
        if (report.h0 == 0)
            throw MathRefusal("h0 = 0 for " + std::to_string(a.k) + " general twistor fibers in degree " +
                              std::to_string(a.d) + " (rank " + std::to_string(report.rank) + " of " +
                              std::to_string(report.cols) + " columns)");
        Rng rng = Rng(run.seed).derive(1);
        f = general_member(sys.basis, rng, a.height);
    }

    GaussianRational factor;
    bool jinv = j_proportionality(f, factor);
    if (jinv) f = normalize_j_invariant(f, factor);

    for (std::size_t i = 0; i < config.lines.size(); ++i)
        if (!contains_line(f, config.lines[i]))
            throw InvariantViolation("built surface misses input line " + std::to_string(i));
    jinfo["is_j_invariant"] = jinv;
    if (jinv) jinfo["factor"] = io::to_json(factor);

    json lines = json::array(), pl = json::array();
    for (const auto& l : config.lines) {
        lines.push_back(io::line_to_json(l));
        pl.push_back(io::plucker_to_json(plucker_of(l)));
    }
    json doc = {{"surface", io::surface_to_json(f)},
                {"lines", lines},
                {"plucker", pl},
                {"cohomology", io::report_to_json(report)},
                {"lines_verified", true},
                {"j", jinfo}};
    emit(std::move(doc), run);
    return kOk;
}

// analyze --------------------------------------------------------------------

int cmd_analyze(const std::string& path, SurfaceOptions opts, Run& run) {
    json in = read_json(path);
    ExactForm f;
    std::vector<ExactLine> lines;
    try {
        f = io::surface_from_json(in.contains("surface") ? in.at("surface") : in);
        if (in.contains("lines"))
            for (const auto& l : in.at("lines")) lines.push_back(io::line_from_json(l));
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    if (f.is_zero()) throw InvalidInput(path + ": zero surface");
    SurfaceReport r = analyze_surface(f, lines, opts);
    emit(io::surface_report_to_json(r, opts), run);
    return kOk;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const std::string& level, int threads) {
    auto results = acceptance::run(level == "full", std::cout, threads);
    int passed = 0;
    const acceptance::CriterionResult* first = nullptr;
    for (const auto& r : results) {
        if (r.pass)
            ++passed;
        else if (!first)
            first = &r;
    }
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    if (first) {
        std::cerr << "first failing check: criterion " << first->id << " (" << first->name << "): " << first->detail
                  << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twistor lines on surfaces in CP^3"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Worker cap for numerical searches")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_copy(argv, argv + argc);
    argv_copy.erase(argv_copy.begin());
    Run run;
    run.command = joined(argv_copy);
    std::optional<std::uint64_t> seed_flag;

    auto* fiber = app.add_subcommand("fiber", "Twistor fiber over (q1, q2) in the chart h1 = 1");
    std::string q1s, q2s;
    fiber->add_option("--q1", q1s, "Complex literal a/b+c/di")->required();
    fiber->add_option("--q2", q2s, "Complex literal")->required();
    fiber->add_option("--out", run.output, "Output file (default stdout)");

    auto* nu_cmd = app.add_subcommand("nu", "Table of nu, nu_n, nu_s, nu_j");
    int max_d = 0;
    std::string format = "csv";
    nu_cmd->add_option("--max-d", max_d)->required();
    nu_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    nu_cmd->add_option("--out", run.output);

    auto* build = app.add_subcommand("build", "Surface of degree d through k general twistor fibers");
    BuildArgs ba;
    build->add_option("--k", ba.k)->required();
    build->add_option("--d", ba.d)->required();
    build->add_flag("--j-invariant", ba.j_invariant, "Emit a j-invariant member");
    build->add_option("--seed", seed_flag, "Default: $TWISTOR_SEED or 1");
    build->add_option("--height", ba.height, "Height bound for sampled rationals");
    build->add_option("--out", run.output);

    auto* analyze = app.add_subcommand("analyze", "Lines, singularities and irreducibility of a surface");
    SurfaceOptions so;
    bool no_lines = false, no_sing = false, no_irr = false;
    analyze->add_option("--surface", run.input, "Surface JSON (bare or as written by build)")->required();
    analyze->add_option("--seed", seed_flag);
    analyze->add_option("--starts-per-chart", so.lines.starts_per_chart, "0 means 200 d");
    analyze->add_option("--singularity-starts", so.singularity_starts);
    analyze->add_flag("--no-lines", no_lines);
    analyze->add_flag("--no-singularity", no_sing);
    analyze->add_flag("--no-irreducibility", no_irr);
    analyze->add_option("--out", run.output);

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    std::string level = "quick";
    verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        run.seed = seed_flag ? *seed_flag : default_seed();
        if (*fiber) return cmd_fiber(q1s, q2s, run);
        if (*nu_cmd) return cmd_nu(max_d, format, run);
        if (*build) {
            run.tolerances = {{"arithmetic", "exact"}};
            return cmd_build(ba, run);
        }
        if (*analyze) {
            so.seed = run.seed;
            so.lines.seed = run.seed;
            so.lines.threads = threads;
            so.run_lines = !no_lines;
            so.run_singularity = !no_sing;
            so.run_irreducibility = !no_irr;
            run.tolerances = {{"line_accept", so.lines.accept_tol},
                              {"line_dedup", so.lines.dedup_tol},
                              {"singularity", so.singularity_tol}};
            return cmd_analyze(run.input, so, run);
        }
        if (*verify) return cmd_verify(level, threads);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const MathRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefusal;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}

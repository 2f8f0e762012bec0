#include "moprl/config.hpp"
#include "moprl/criteria.hpp"
#include "moprl/generators.hpp"
#include "moprl/parallel.hpp"
#include "moprl/records.hpp"
#include "moprl/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace moprl;
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitResultFailure = 2;  // non-normal solve index, failed verify record
constexpr int kExitHypothesis = 3;

struct CliArgs {
    std::string config_path;
    std::string index;
    std::string type = "ii";
    std::string width;
    std::string criterion;
    std::optional<uint64_t> seed;
    std::string out_dir;
    std::optional<int> j;
    std::optional<int> l;
    std::optional<int> k;
    std::optional<int> trials;
    std::optional<int> count;
    std::string path_start;
    std::string path_steps;
};

int64_t elapsed_us(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw ConfigError("bad integer list '" + text + "'");
        values.push_back(v);
    }
    if (values.empty()) throw ConfigError("empty integer list");
    return values;
}

struct Session {
    RunConfig config;
    MeasureSystem system;
    std::string fingerprint;
    std::string command;
    std::optional<std::string> out_dir;
    std::vector<ordered_json> records;
    bool index_pinned = false;

    Session(const CliArgs& args, const std::string& cmd)
        : config(parse_config_file(args.config_path)),
          system(build_system(config.system)),
          fingerprint(system_fingerprint(config.system)),
          command(cmd) {
        if (!args.out_dir.empty()) out_dir = args.out_dir;
        if (args.seed) config.seed = *args.seed;
        if (!args.index.empty()) {
            config.indices = {MultiIndex(parse_int_csv(args.index))};
            index_pinned = true;
        }
        if (!args.width.empty()) config.options.width = rational_from_string(args.width);
        if (!args.criterion.empty()) config.options.criterion = args.criterion;
        if (args.j) config.options.j = *args.j;
        if (args.l) config.options.l = *args.l;
        if (args.k) config.options.k = *args.k;
        if (args.trials) config.options.trials = *args.trials;
        if (args.count) config.options.count = *args.count;
        if (!args.path_start.empty()) config.options.path_start = parse_int_csv(args.path_start);
        if (!args.path_steps.empty()) config.options.path_steps = parse_int_csv(args.path_steps);
    }

    ordered_json envelope() const {
        ordered_json record;
        record["command"] = command;
        record["fingerprint"] = fingerprint;
        return record;
    }

    const std::vector<MultiIndex>& indices() const {
        if (config.indices.empty()) throw ConfigError("no indices given (config or --index)");
        return config.indices;
    }

    void flush() {
        for (const auto& record : records) std::cout << record.dump() << "\n";
        if (out_dir) {
            fs::create_directories(*out_dir);
            std::ofstream file(fs::path(*out_dir) / "records.jsonl");
            for (const auto& record : records) file << record.dump() << "\n";
        }
    }
};

// --- moments ---------------------------------------------------------------

int cmd_moments(Session& session) {
    const int kmax = session.config.options.kmax.value_or(8);
    if (kmax < 0) throw ConfigError("options.kmax must be >= 0");
    for (size_t j = 0; j < session.system.size(); ++j) {
        auto start = std::chrono::steady_clock::now();
        ordered_json record = session.envelope();
        record["measure"] = j;
        ordered_json row = ordered_json::array();
        for (int k = 0; k <= kmax; ++k) {
            row.push_back(to_string(session.system.measure(j).moment(static_cast<unsigned>(k))));
        }
        record["moments"] = std::move(row);
        record["timing_us"] = elapsed_us(start);
        session.records.push_back(std::move(record));
    }
    session.flush();
    return kExitOk;
}

// --- solve -----------------------------------------------------------------

int cmd_solve(Session& session, const std::string& type) {
    int exit_code = kExitOk;
    for (const MultiIndex& n : session.indices()) {
        auto start = std::chrono::steady_clock::now();
        ordered_json record = session.envelope();
        record["type"] = type;
        record["index"] = index_to_json(n);
        try {
            if (type == "ii") {
                record["coefficients"] = polynomial_to_json(solve_type_ii(session.system, n));
            } else {
                TypeIVector a = solve_type_i(session.system, n);
                ordered_json components = ordered_json::array();
                for (const Polynomial& p : a.components) {
                    components.push_back(polynomial_to_json(p));
                }
                record["components"] = std::move(components);
            }
        } catch (const NotNormalError& e) {
            record["error"] = e.what();
            exit_code = kExitResultFailure;
        }
        record["timing_us"] = elapsed_us(start);
        session.records.push_back(std::move(record));
    }
    session.flush();
    return exit_code;
}

// --- zeros -----------------------------------------------------------------

// Which interval interior holds the isolated root; refines as needed. A root
// sitting exactly on an interval edge belongs to no interior.
std::optional<size_t> gamma_slot(const MeasureSystem& system, const Polynomial& sf,
                                 IsolatingInterval interval) {
    if (!system.has_intervals()) return std::nullopt;
    while (true) {
        bool straddles = false;
        for (size_t j = 0; j < system.size(); ++j) {
            const Interval& gamma = system.interval(j);
            if (interval.lo > gamma.lo && interval.hi < gamma.hi) return j;
            for (const Rational& edge : {gamma.lo, gamma.hi}) {
                if (interval.lo < edge && interval.hi > edge) {
                    if (sf.evaluate(edge) == 0) return std::nullopt;
                    straddles = true;
                }
            }
        }
        if (!straddles) return std::nullopt;
        refine_to_width(sf, interval, interval.width());
    }
}

ordered_json zeros_of(const MeasureSystem& system, const Polynomial& p, const Rational& width,
                      int precision) {
    ordered_json out;
    out["polynomial"] = polynomial_to_json(p);
    out["degree"] = p.degree();
    ordered_json roots = ordered_json::array();
    if (!p.is_zero() && !p.is_constant()) {
        Polynomial sf = squarefree_part(p);
        for (const IsolatingInterval& interval : isolate_real_roots(p, width)) {
            ordered_json entry = interval_to_json(interval, precision);
            std::optional<size_t> slot = gamma_slot(system, sf, interval);
            if (slot) entry["gamma"] = *slot;
            roots.push_back(std::move(entry));
        }
        out["distinct_real_roots"] = roots.size();
        out["real_rooted"] = is_real_rooted(p);
    } else {
        out["distinct_real_roots"] = 0;
        out["real_rooted"] = !p.is_zero();
    }
    out["roots"] = std::move(roots);
    return out;
}

int cmd_zeros(Session& session, const std::string& type) {
    const Rational width = session.config.options.width.value_or(make_rational(1, 1024));
    if (width <= 0) throw ConfigError("width must be positive");
    const int precision = session.config.options.precision.value_or(12);
    int exit_code = kExitOk;
    for (const MultiIndex& n : session.indices()) {
        auto start = std::chrono::steady_clock::now();
        ordered_json record = session.envelope();
        record["type"] = type;
        record["index"] = index_to_json(n);
        record["width"] = to_string(width);
        try {
            if (type == "ii") {
                Polynomial p = solve_type_ii(session.system, n);
                record.update(zeros_of(session.system, p, width, precision));
            } else {
                TypeIVector a = solve_type_i(session.system, n);
                ordered_json components = ordered_json::array();
                for (const Polynomial& p : a.components) {
                    components.push_back(zeros_of(session.system, p, width, precision));
                }
                record["components"] = std::move(components);
            }
        } catch (const NotNormalError& e) {
            record["error"] = e.what();
            exit_code = kExitResultFailure;
        }
        record["timing_us"] = elapsed_us(start);
        session.records.push_back(std::move(record));
    }
    session.flush();
    return exit_code;
}

// --- verify ----------------------------------------------------------------

struct VerifyJob {
    std::string label;
    std::function<CriterionReport()> run;
};

CriterionReport run_chebyshev(const MeasureSystem& system, const MultiIndex& n, int trials,
                              uint64_t seed) {
    CriterionReport report;
    report.criterion = "chebyshev";
    report.system_summary = system.summary();
    report.index = n;
    report.seed = seed;
    report.verdict =
        chebyshev_sample_check(system, n, trials, seed) ? Verdict::Pass : Verdict::Fail;
    return report;
}

std::vector<VerifyJob> build_verify_jobs(Session& session, const std::string& criterion,
                                         bool pinned) {
    const MeasureSystem& system = session.system;
    const ConfigOptions& options = session.config.options;
    const size_t r = system.size();
    std::vector<VerifyJob> jobs;

    auto add = [&](std::string label, std::function<CriterionReport()> fn) {
        jobs.push_back({std::move(label), std::move(fn)});
    };
    auto slots = [&](std::optional<int> pin) {
        std::vector<size_t> out;
        if (pin) {
            out.push_back(static_cast<size_t>(*pin));
        } else {
            for (size_t j = 0; j < r; ++j) out.push_back(j);
        }
        return out;
    };

    if (criterion == "andreief") {
        const int count = options.count.value_or(0);
        if (count == 0) {
            add("fixture", [] {
                DiscreteMeasure m(
                    {{Rational(0), make_rational(1, 2)}, {Rational(1), make_rational(1, 2)}});
                std::vector<Polynomial> basis{Polynomial::constant(Rational(1)),
                                              Polynomial::variable()};
                return verify_andreief(m, basis, basis, {});
            });
        }
        const uint64_t seed = session.config.seed;
        for (int i = 0; i < count; ++i) {
            add("random " + std::to_string(i), [seed, i] {
                std::mt19937_64 rng(seed + static_cast<uint64_t>(i));
                DiscreteMeasure m = random_measure_on(rng, Interval(Rational(-1), Rational(1)),
                                                      static_cast<size_t>(uniform_long(rng, 2, 6)));
                const size_t nn = static_cast<size_t>(uniform_long(rng, 1, 5));
                const size_t mm = static_cast<size_t>(uniform_long(rng, 1, static_cast<long>(nn)));
                std::vector<Polynomial> phis;
                std::vector<Polynomial> psis;
                for (size_t q = 0; q < mm; ++q) phis.push_back(random_polynomial(rng, 3));
                for (size_t q = 0; q < nn; ++q) psis.push_back(random_polynomial(rng, 3));
                std::vector<std::vector<Rational>> a(nn - mm, std::vector<Rational>(nn));
                for (auto& row : a) {
                    for (auto& v : row) {
                        v = make_rational(uniform_long(rng, -4, 4), uniform_long(rng, 1, 3));
                    }
                }
                CriterionReport report = verify_andreief(m, phis, psis, a);
                report.seed = seed + static_cast<uint64_t>(i);
                return report;
            });
        }
        return jobs;
    }

    if (criterion == "perturbation") {
        Polynomial q = options.q ? Polynomial(*options.q) : Polynomial{};
        for (const MultiIndex& n : session.indices()) {
            add("perturbation " + n.str(),
                [&system, q, n] { return verify_perturbation_lemma(system, q, n); });
        }
        return jobs;
    }

    if (criterion == "higher-wronskian" || criterion == "even-wronskian") {
        if (!options.path_start || !options.path_steps) {
            throw ConfigError("higher-order checks need path_start and path_steps");
        }
        std::vector<size_t> steps;
        for (int s : *options.path_steps) {
            if (s < 0) throw ConfigError("negative path step");
            steps.push_back(static_cast<size_t>(s));
        }
        IncreasingPath path(MultiIndex(*options.path_start), steps);
        PolynomialFamily family =
            options.type.value_or("ii") == "i" ? PolynomialFamily::TypeI : PolynomialFamily::TypeII;
        std::optional<size_t> slot;
        if (options.j) slot = static_cast<size_t>(*options.j);
        if (criterion == "higher-wronskian") {
            add("path", [&system, path, family, slot] {
                return verify_higher_wronskian(system, path, family, slot);
            });
        } else {
            add("path", [&system, path, family, slot] {
                return verify_even_wronskian_nonvanishing(system, path, family, slot);
            });
        }
        return jobs;
    }

    for (const MultiIndex& n : session.indices()) {
        if (criterion == "zero-ii") {
            add("zero-ii " + n.str(),
                [&system, n] { return verify_zero_criterion_type_ii(system, n); });
        } else if (criterion == "zero-i") {
            for (size_t j : slots(options.j)) {
                if (!pinned && n[j] < 1) continue;
                add("zero-i " + n.str() + " j=" + std::to_string(j),
                    [&system, n, j] { return verify_zero_criterion_type_i(system, n, j); });
            }
        } else if (criterion == "interlace-ii") {
            for (size_t j : slots(options.j)) {
                add("interlace-ii " + n.str() + " j=" + std::to_string(j),
                    [&system, n, j] { return verify_interlace_criterion_type_ii(system, n, j); });
            }
        } else if (criterion == "interlace-neighbors") {
            for (size_t j : slots(options.j)) {
                for (size_t k : slots(options.k)) {
                    if (!pinned && k <= j) continue;
                    if (pinned && k == j) continue;
                    add("interlace-neighbors " + n.str(), [&system, n, j, k] {
                        return verify_interlace_criterion_neighbors(system, n, j, k);
                    });
                }
            }
        } else if (criterion == "interlace-i") {
            for (size_t j : slots(options.j)) {
                if (!pinned && n[j] < 2) continue;
                for (size_t l : slots(options.l)) {
                    if (!pinned && n[l] < 1) continue;
                    add("interlace-i " + n.str(), [&system, n, l, j] {
                        return verify_interlace_criterion_type_i(system, n, l, j);
                    });
                }
            }
        } else if (criterion == "angelesco-count") {
            add("angelesco-count " + n.str(),
                [&system, n] { return verify_angelesco_zero_count(system, n); });
        } else if (criterion == "at-location") {
            add("at-location " + n.str(),
                [&system, n] { return verify_at_zero_location(system, n); });
        } else if (criterion == "nikishin-location") {
            for (size_t j : slots(options.j)) {
                const bool in_regime = (j == 0) ? (n[0] + 1 <= n[1]) : (n[0] + 1 >= n[1]);
                if (!pinned && (!in_regime || n[j] < 1)) continue;
                add("nikishin-location " + n.str(), [&system, n, j] {
                    return verify_nikishin_type_i_location(system, n, j);
                });
            }
        } else if (criterion == "nikishin-interlacing") {
            for (size_t j : slots(options.j)) {
                const bool in_regime = (j == 0) ? (n[0] + 1 <= n[1]) : (n[0] + 1 >= n[1]);
                if (!pinned && (!in_regime || n[0] < 1 || n[1] < 1)) continue;
                add("nikishin-interlacing " + n.str(), [&system, n, j] {
                    return verify_nikishin_type_i_interlacing(system, n, j);
                });
            }
        } else if (criterion == "quasiorthogonality") {
            for (size_t j : slots(options.j)) {
                if (!pinned && n[j] < 1) continue;
                add("quasiorthogonality " + n.str(), [&system, n, j] {
                    Polynomial p = solve_type_ii(system, n);
                    return verify_quasiorthogonality(system.measure(j), p, n[j]);
                });
            }
        } else if (criterion == "chebyshev") {
            const int trials = options.trials.value_or(100);
            const uint64_t seed = session.config.seed;
            add("chebyshev " + n.str(),
                [&system, n, trials, seed] { return run_chebyshev(system, n, trials, seed); });
        } else {
            throw ConfigError("unknown criterion '" + criterion + "'");
        }
    }
    return jobs;
}

int cmd_verify(Session& session) {
    if (!session.config.options.criterion) {
        throw ConfigError("verify needs a criterion (--criterion or options.criterion)");
    }
    const std::string criterion = *session.config.options.criterion;
    // explicitly pinned parameters must surface hypothesis violations (exit 3)
    // instead of being skipped like enumerated grid combos
    const bool pinned = session.config.options.j.has_value() ||
                        session.config.options.l.has_value() ||
                        session.config.options.k.has_value() ||
                        session.config.options.path_start.has_value() || session.index_pinned;
    std::vector<VerifyJob> jobs = build_verify_jobs(session, criterion, pinned);

    struct Outcome {
        CriterionReport report;
        std::string skipped;
        int64_t timing_us = 0;
    };
    std::vector<Outcome> outcomes = parallel_map(jobs, [&](const VerifyJob& job) {
        Outcome outcome;
        auto start = std::chrono::steady_clock::now();
        if (pinned) {
            outcome.report = job.run();  // pinned parameters: hypothesis errors escape
        } else {
            try {
                outcome.report = job.run();
            } catch (const std::invalid_argument& e) {
                outcome.skipped = e.what();
            }
        }
        outcome.timing_us = elapsed_us(start);
        return outcome;
    });

    bool all_pass = true;
    for (const Outcome& outcome : outcomes) {
        ordered_json record = session.envelope();
        if (!outcome.skipped.empty()) {
            record["skipped"] = outcome.skipped;
        } else {
            record.update(report_to_json(outcome.report));
            all_pass = all_pass && outcome.report.passed();
        }
        record["timing_us"] = outcome.timing_us;
        session.records.push_back(std::move(record));
    }
    session.flush();
    return all_pass ? kExitOk : kExitResultFailure;
}

// --- scan ------------------------------------------------------------------

int cmd_scan(Session& session) {
    const Rational width = session.config.options.width.value_or(make_rational(1, 1024));
    const int precision = session.config.options.precision.value_or(12);
    const std::vector<MultiIndex>& indices = session.indices();

    struct Row {
        MultiIndex index;
        bool supported = false;
        bool normal = false;
        Rational det;
        std::vector<Rational> midpoints;
        int64_t timing_us = 0;
    };
    std::vector<Row> rows = parallel_map(indices, [&](const MultiIndex& n) {
        Row row;
        auto start = std::chrono::steady_clock::now();
        row.index = n;
        row.supported = support_richness_ok(session.system, n);
        if (row.supported) {
            row.det = det_exact(build_H(session.system, n));
            row.normal = row.det != 0;
            if (row.normal && n.total() > 0) {
                Polynomial p = solve_type_ii(session.system, n);
                for (const IsolatingInterval& interval : isolate_real_roots(p, width)) {
                    row.midpoints.push_back(interval.midpoint());
                }
            }
        }
        row.timing_us = elapsed_us(start);
        return row;
    });

    std::ostringstream csv;
    csv << "index,supported,normal,det,det_sign,root_midpoints,root_midpoints_decimal\n";
    for (const Row& row : rows) {
        ordered_json record = session.envelope();
        record["index"] = index_to_json(row.index);
        std::string index_label;
        for (size_t i = 0; i < row.index.order(); ++i) {
            if (i) index_label += ":";
            index_label += std::to_string(row.index[i]);
        }
        if (!row.supported) {
            record["status"] = "insufficient support";
            csv << index_label << ",0,,,,,\n";
        } else {
            record["status"] = "ok";
            record["normal"] = row.normal;
            record["det"] = to_string(row.det);
            record["det_sign"] = sign_of(row.det);
            ordered_json exact = ordered_json::array();
            ordered_json decimal = ordered_json::array();
            std::string exact_cell;
            std::string decimal_cell;
            for (size_t i = 0; i < row.midpoints.size(); ++i) {
                exact.push_back(to_string(row.midpoints[i]));
                decimal.push_back(decimal_string(row.midpoints[i], precision));
                if (i) {
                    exact_cell += ";";
                    decimal_cell += ";";
                }
                exact_cell += to_string(row.midpoints[i]);
                decimal_cell += decimal_string(row.midpoints[i], precision);
            }
            record["root_midpoints"] = std::move(exact);
            record["root_midpoints_decimal"] = std::move(decimal);
            csv << index_label << ",1," << (row.normal ? 1 : 0) << "," << to_string(row.det) << ","
                << sign_of(row.det) << "," << exact_cell << "," << decimal_cell << "\n";
        }
        record["timing_us"] = row.timing_us;
        session.records.push_back(std::move(record));
    }

    const fs::path csv_dir = session.out_dir ? fs::path(*session.out_dir) : fs::path(".");
    fs::create_directories(csv_dir);
    std::ofstream csv_file(csv_dir / "scan.csv");
    csv_file << csv.str();
    session.flush();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiple orthogonal polynomial toolkit"};
    app.require_subcommand(1);
    CliArgs args;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path, "JSON config file")->required();
        cmd->add_option("--index", args.index, "single multi-index a,b,...");
        cmd->add_option("--seed", args.seed, "seed override");
        cmd->add_option("--out", args.out_dir, "output directory");
    };

    CLI::App* moments = app.add_subcommand("moments", "emit exact moments c_k");
    add_common(moments);

    CLI::App* solve = app.add_subcommand("solve", "solve type I / type II polynomials");
    add_common(solve);
    solve->add_option("--type", args.type, "i or ii")->check(CLI::IsMember({"i", "ii"}));

    CLI::App* zeros = app.add_subcommand("zeros", "isolate zeros with certified intervals");
    add_common(zeros);
    zeros->add_option("--type", args.type, "i or ii")->check(CLI::IsMember({"i", "ii"}));
    zeros->add_option("--width", args.width, "max interval width p/q");

    CLI::App* verify = app.add_subcommand("verify", "run a criterion suite");
    add_common(verify);
    verify->add_option("--criterion", args.criterion, "criterion name");
    verify->add_option("--type", args.type, "i or ii (higher-order checks)")
        ->check(CLI::IsMember({"i", "ii"}));
    verify->add_option("--j", args.j, "measure slot (0-based)");
    verify->add_option("--l", args.l, "neighbor direction (0-based)");
    verify->add_option("--k", args.k, "second slot (0-based)");
    verify->add_option("--trials", args.trials, "sampling trials");
    verify->add_option("--count", args.count, "random instance count");
    verify->add_option("--path-start", args.path_start, "path start index a,b,...");
    verify->add_option("--path-steps", args.path_steps, "path step directions");

    CLI::App* scan = app.add_subcommand("scan", "grid scan: normality, det sign, zeros");
    add_common(scan);
    scan->add_option("--width", args.width, "max interval width p/q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (moments->parsed()) {
            Session session(args, "moments");
            return cmd_moments(session);
        }
        if (solve->parsed()) {
            Session session(args, "solve");
            return cmd_solve(session, args.type);
        }
        if (zeros->parsed()) {
            Session session(args, "zeros");
            return cmd_zeros(session, args.type);
        }
        if (verify->parsed()) {
            Session session(args, "verify");
            session.config.options.type = args.type;
            return cmd_verify(session);
        }
        if (scan->parsed()) {
            Session session(args, "scan");
            return cmd_scan(session);
        }
    } catch (const ConfigError& e) {
        std::cerr << "{\"error\":" << ordered_json(e.what()).dump() << "}\n";
        return kExitHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "{\"error\":" << ordered_json(e.what()).dump() << "}\n";
        return kExitHypothesis;
    } catch (const NotNormalError& e) {
        std::cerr << "{\"error\":" << ordered_json(e.what()).dump() << "}\n";
        return kExitResultFailure;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":" << ordered_json(e.what()).dump() << "}\n";
        return kExitInternal;
    }
    return kExitInternal;
}

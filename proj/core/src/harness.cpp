#include "ivq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "ivq/mst.hpp"
#include "ivq/optbrute.hpp"

namespace ivq {

namespace {

// Integer in [lo, hi] from raw engine output; independent of the standard
// library's distribution implementations.
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

bool chance(std::mt19937_64& rng, double p) {
    constexpr std::uint64_t scale = 1'000'000;
    return static_cast<double>(rng() % scale) < p * static_cast<double>(scale);
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))]);
    }
}

bool is_fixture(const std::string& name) {
    const auto& names = fixture_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_lex(const std::string& algorithm) {
    return algorithm.size() > 4 && algorithm.compare(algorithm.size() - 4, 4, "-lex") == 0;
}

// Interval shapes the input set admits, in a fixed order.
std::vector<Shape> interval_shapes(const TypeSet& input) {
    std::vector<Shape> shapes;
    if (input.has_open()) shapes.push_back(Shape::Open);
    if (input.has_closed()) shapes.push_back(Shape::Closed);
    return shapes;
}

struct TrialSetup {
    UncertainInstance instance;
    std::unique_ptr<Oracle> oracle;
    SolverStrategy strategy;
};

TrialSetup prepare_trial(const ExperimentConfig& config, std::size_t trial) {
    const auto seed = trial_seed(config.seed, trial);
    const auto tie = is_lex(config.algorithm) ? TieRule::Lex : TieRule::Stable;
    auto params = config.generator;
    if (config.n_min != 0) {
        if (config.n_min > params.n) throw ConfigError("n_min exceeds n");
        std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
        params.n = static_cast<std::size_t>(
            uniform(rng, static_cast<std::int64_t>(config.n_min), static_cast<std::int64_t>(params.n)));
    }

    TrialSetup setup;
    if (is_fixture(config.oracle)) {
        if (params.problem.index() == 1) throw ConfigError("fixtures are selection instances");
        const auto& sel = std::get<SelectionProblem>(params.problem);
        if (config.oracle == "min-tight") {
            setup.instance = fixture_instance("min-tight", params.n, trial % 2 == 1);
        } else if (config.oracle == "kmin-point") {
            setup.instance = fixture_instance("kmin-point", sel.k, !params.model.returns.has_point());
        } else if (config.oracle == "cp-anomaly") {
            setup.instance = fixture_instance("cp-anomaly", params.n);
        } else {
            setup.instance = fixture_instance(config.oracle, params.n);
        }
        if (setup.instance.model != params.model) {
            throw ConfigError("fixture " + config.oracle + " uses model " + setup.instance.model.str() + ", not " +
                              params.model.str());
        }
        auto fixture_sel = std::get<SelectionProblem>(setup.instance.problem);
        fixture_sel.tie_rule = tie;
        fixture_sel.objective = sel.objective;
        setup.instance.problem = fixture_sel;
    } else {
        if (auto* sel = std::get_if<SelectionProblem>(&params.problem)) sel->tie_rule = tie;
        if (auto* graph = std::get_if<MstProblem>(&params.problem)) graph->lex = config.algorithm == "mst-lex";
        setup.instance = generate_instance(params, seed);
    }

    setup.oracle = make_oracle(config.oracle, setup.instance);
    StrategyOptions options;
    options.allow_unbounded_category3 = config.oracle == "cp-anomaly";
    setup.strategy = make_strategy(config.algorithm, setup.instance, options);
    return setup;
}

std::string format_ratio(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", ratio);
    return buf;
}

std::string opt_source_for(const ExperimentConfig& config) {
    if (!is_fixture(config.oracle)) return "brute-force";
    return is_lex(config.algorithm) ? "brute-force-opt-facing" : "fixture";
}

const char* kCsvHeader = "trial,algorithm,model,n,k,queries,opt,ratio,gap,status";

}  // namespace

Problem parse_problem(const std::string& text, TieRule tie) {
    if (text == "mst") return MstProblem{0, {}, tie == TieRule::Lex};
    if (text == "min") return SelectionProblem{1, Objective::KthMin, tie};
    if (text == "max") return SelectionProblem{1, Objective::KthMax, tie};
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    if (colon != std::string::npos && (head == "kmin" || head == "kmax")) {
        std::size_t used = 0;
        long long k = 0;
        try {
            k = std::stoll(text.substr(colon + 1), &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != text.size() - colon - 1 || k < 1) {
            throw ConfigError("bad k in problem '" + text + "'");
        }
        return SelectionProblem{static_cast<std::size_t>(k), head == "kmin" ? Objective::KthMin : Objective::KthMax,
                                tie};
    }
    throw ConfigError("unknown problem '" + text + "' (expected min, max, kmin:K, kmax:K or mst)");
}

std::string problem_str(const Problem& problem) {
    if (std::holds_alternative<MstProblem>(problem)) return "mst";
    const auto& sel = std::get<SelectionProblem>(problem);
    const bool min = sel.objective == Objective::KthMin;
    if (sel.k == 1) return min ? "min" : "max";
    return std::string(min ? "kmin:" : "kmax:") + std::to_string(sel.k);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + trial + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

UncertainInstance generate_instance(const GeneratorParams& params, std::uint64_t seed) {
    if (classify_model(params.model) == ModelCategory::InvalidAlpha) {
        throw ConfigError("model " + params.model.str() + " is not a valid model");
    }
    if (params.n == 0) throw ConfigError("n must be positive");
    if (params.n > 90) throw ConfigError("n above 90 is not supported by the generator");
    if (params.block_width < 10 || params.block_width % 2 != 0) {
        throw ConfigError("block_width must be an even number of at least 10");
    }
    if (params.overlap < 0 || params.overlap > 1 || params.point_fraction < 0 || params.point_fraction > 1) {
        throw ConfigError("overlap and point_fraction must lie in [0, 1]");
    }
    if (params.point_fraction > 0 && !params.model.input.has_point()) {
        throw ConfigError("point_fraction > 0 needs P in the input set of " + params.model.str());
    }
    const auto shapes = interval_shapes(params.model.input);
    if (shapes.empty() && params.point_fraction < 1) {
        throw ConfigError("input set " + params.model.input.str() + " admits no intervals; set point_fraction to 1");
    }

    std::mt19937_64 rng(seed);
    UncertainInstance inst;
    inst.model = params.model;
    inst.problem = params.problem;
    const auto n = params.n;

    std::vector<std::int64_t> block(n);
    for (std::size_t i = 0; i < n; ++i) block[i] = static_cast<std::int64_t>(i);
    shuffle(rng, block);
    std::vector<std::int64_t> fraction(96);
    for (std::int64_t r = 0; r < 96; ++r) fraction[static_cast<std::size_t>(r)] = r + 1;
    shuffle(rng, fraction);

    const auto w = params.block_width;
    std::vector<Rational> hidden;
    for (std::size_t i = 0; i < n; ++i) {
        const auto lo = w * block[i] + 2 * uniform(rng, 0, 1);
        auto hi = lo + 2 * uniform(rng, 1, (w - 4) / 2);
        if (chance(rng, params.overlap)) hi += w * uniform(rng, 1, 3);

        if (shapes.empty() || chance(rng, params.point_fraction)) {
            const Rational value = lo + uniform(rng, 0, hi - lo);
            inst.areas.push_back(Area::point(value));
            hidden.push_back(value);
            continue;
        }
        const auto shape = shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(shapes.size()) - 1))];
        if (shape == Shape::Open) {
            inst.areas.push_back(Area::open(lo, hi));
        } else {
            inst.areas.push_back(Area::closed(lo, hi));
        }
        if (params.tie_prone) {
            const bool closed = shape == Shape::Closed;
            hidden.emplace_back(uniform(rng, closed ? lo : lo + 1, closed ? hi : hi - 1));
        } else {
            hidden.push_back(Rational(uniform(rng, lo, hi - 1)) + Rational(fraction[i], 97));
        }
    }
    inst.hidden = std::move(hidden);

    if (auto* graph = std::get_if<MstProblem>(&inst.problem)) {
        auto vertices = params.vertices != 0 ? params.vertices : n / 2 + 1;
        if (vertices < 2 || vertices > n + 1) {
            throw ConfigError("a connected graph with " + std::to_string(n) + " edges needs 2.." +
                              std::to_string(n + 1) + " vertices");
        }
        graph->vertices = vertices;
        graph->edges.clear();
        for (std::size_t v = 1; v < vertices; ++v) {
            graph->edges.push_back({static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v) - 1)), v});
        }
        while (graph->edges.size() < n) {
            const auto u = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
            auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(vertices) - 2));
            if (v >= u) ++v;
            graph->edges.push_back({u, v});
        }
        shuffle(rng, graph->edges);
    } else {
        const auto& sel = std::get<SelectionProblem>(inst.problem);
        if (sel.k < 1 || sel.k > n) {
            throw ConfigError("k = " + std::to_string(sel.k) + " outside [1, " + std::to_string(n) + "]");
        }
    }
    return inst;
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"min-tight", "kmin-point", "cp-anomaly", "opo-counter"};
    return names;
}

UncertainInstance fixture_instance(const std::string& name, std::size_t size, bool variant) {
    if (name != "opo-counter" && size < 1) throw ConfigError("fixture size must be positive");
    if (name == "min-tight") return min_tight_instance(size, variant);
    if (name == "kmin-point") return kmin_point_instance(size, !variant);
    if (name == "cp-anomaly") {
        if (size < 2) throw ConfigError("cp-anomaly needs n >= 2");
        return cp_anomaly_instance(size);
    }
    if (name == "opo-counter") return opo_counterexample_instance();
    throw ConfigError("unknown fixture '" + name + "'");
}

std::unique_ptr<Oracle> make_oracle(const std::string& spec, const UncertainInstance& instance) {
    const auto need_hidden = [&]() -> const std::vector<Rational>& {
        if (!instance.hidden) throw ConfigError("oracle '" + spec + "' needs hidden values in the instance");
        return *instance.hidden;
    };
    if (spec == "exact") {
        if (!instance.model.returns.has_point()) {
            throw ConfigError("exact oracle needs P in the return set of " + instance.model.str());
        }
        return std::make_unique<GroundTruthOracle>(ExactPolicy{}, instance.model.returns, need_hidden());
    }
    if (spec == "halve" || spec.rfind("halve:", 0) == 0) {
        HalvePolicy policy;
        if (spec.size() > 6) {
            try {
                policy.shrink = Rational::parse(spec.substr(6));
            } catch (const std::exception&) {
                throw ConfigError("bad shrink factor in '" + spec + "'");
            }
        }
        if (policy.shrink <= Rational(0) || policy.shrink >= Rational(1)) {
            throw ConfigError("halve shrink must lie in (0, 1)");
        }
        return std::make_unique<GroundTruthOracle>(policy, instance.model.returns, need_hidden());
    }
    if (spec.rfind("script:", 0) == 0) {
        return std::make_unique<ScriptedOracle>(script_from_json(read_json_file(spec.substr(7))));
    }

    const auto sel_k = [&] {
        const auto* sel = std::get_if<SelectionProblem>(&instance.problem);
        if (sel == nullptr) throw ConfigError("fixture oracles serve selection instances");
        return sel->k;
    };
    const auto n = instance.size();
    if (spec == "min-tight") {
        if (n < 2) throw ConfigError("min-tight needs at least 2 areas");
        const auto m = n - 1;
        const bool a0_first = instance.areas[0] == Area::open(1, 5);
        if (instance.areas != min_tight_instance(m, !a0_first).areas) {
            throw ConfigError("instance does not match the min-tight fixture");
        }
        return std::make_unique<MinTightAdversary>(m, a0_first ? 0 : m);
    }
    if (spec == "kmin-point") {
        const auto k = sel_k();
        if (instance.areas != kmin_point_instance(k).areas) {
            throw ConfigError("instance does not match the kmin-point fixture for k = " + std::to_string(k));
        }
        return std::make_unique<KminPointAdversary>(k, instance.model.returns.has_point());
    }
    if (spec == "cp-anomaly") {
        if (instance.areas != cp_anomaly_instance(n).areas) {
            throw ConfigError("instance does not match the cp-anomaly fixture");
        }
        return std::make_unique<CpAnomalyAdversary>(n);
    }
    if (spec == "opo-counter") {
        if (instance.areas != opo_counterexample_instance().areas) {
            throw ConfigError("instance does not match the opo-counter fixture");
        }
        return opo_counterexample_oracle();
    }
    throw ConfigError("unknown oracle '" + spec + "'");
}

SolverStrategy make_strategy(const std::string& algorithm, const UncertainInstance& instance,
                             const StrategyOptions& options) {
    if (const auto* graph = std::get_if<MstProblem>(&instance.problem)) {
        if (algorithm != "mst" && algorithm != "mst-lex") {
            throw ConfigError("spanning-tree instances take mst or mst-lex, not " + algorithm);
        }
        const auto category = classify_model(instance.model);
        if (category == ModelCategory::InvalidAlpha) {
            throw ConfigError("model " + instance.model.str() + " is not a valid model");
        }
        if ((algorithm == "mst-lex") != graph->lex) {
            throw ConfigError(algorithm + " does not match the instance's lex flag");
        }
        if (category == ModelCategory::Category3 && !graph->lex) {
            throw ConfigError("Category-3 model " + instance.model.str() + " requires mst-lex");
        }
        try {
            return make_mst_strategy(*graph);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (algorithm == "mst" || algorithm == "mst-lex") {
        throw ConfigError(algorithm + " needs a spanning-tree instance");
    }
    const auto& sel = std::get<SelectionProblem>(instance.problem);
    if (sel.k < 1 || sel.k > instance.size()) throw ConfigError("k out of range");
    return make_selection_strategy(algorithm, sel, instance.model, options);
}

std::optional<std::size_t> query_bound(const std::string& algorithm, const UncertainInstance& instance,
                                       std::size_t opt, bool fixture_opt) {
    if (instance.is_mst()) return 2 * opt;
    const auto& sel = std::get<SelectionProblem>(instance.problem);
    const auto category = classify_model(instance.model);
    const auto k = sel.k;
    const auto n = instance.size();
    if (algorithm == "min1-witness" || algorithm == "kmin-witness" || algorithm == "min1-lex" ||
        algorithm == "kmin-lex") {
        if (category == ModelCategory::Category3 && sel.tie_rule != TieRule::Lex) return std::nullopt;
        if (fixture_opt && k > 1 && category != ModelCategory::Category1) return std::nullopt;
        return 2 * opt;
    }
    if (algorithm == "min1-bypass") return opt + 1;
    if (algorithm == "kmin-bypass") return opt + std::min(k, n - k);
    if (algorithm == "opop-alternate") return 2 * (opt + k);
    return std::nullopt;
}

double TrialRecord::ratio() const {
    const auto raw = static_cast<double>(queries) / static_cast<double>(std::max<std::size_t>(opt, 1));
    return std::stod(format_ratio(raw));
}

TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial) {
    auto setup = prepare_trial(config, trial);
    const auto& inst = setup.instance;
    TrialRecord rec;
    rec.trial = trial;
    rec.algorithm = config.algorithm;
    rec.model = inst.model.str();
    rec.n = inst.size();
    if (const auto* sel = std::get_if<SelectionProblem>(&inst.problem)) rec.k = sel->k;

    const auto budget = config.budget.value_or(default_budget(inst, *setup.oracle));
    const auto run = solve(inst, *setup.oracle, setup.strategy, budget);
    rec.queries = run.total;

    std::optional<std::size_t> opt;
    bool from_fixture = false;
    if (setup.oracle->kind() == OracleKind::Adversary) {
        const auto& adversary = dynamic_cast<const Adversary&>(*setup.oracle);
        if (is_lex(config.algorithm)) {
            const auto facing = adversary.opt_facing();
            opt = opt_value(inst, *facing, setup.strategy.verifier,
                            config.max_total.value_or(default_max_total(inst)))
                      .opt;
        } else {
            opt = adversary.fixture_opt();
            from_fixture = true;
        }
    } else {
        opt = opt_value(inst, *setup.oracle, setup.strategy.verifier,
                        config.max_total.value_or(default_max_total(inst)))
                  .opt;
    }

    if (run.status == Termination::BudgetExceeded) {
        rec.status = "budget-exceeded";
        rec.opt = opt.value_or(0);
    } else if (!opt) {
        rec.status = "opt-unknown";
    } else {
        rec.opt = *opt;
        const auto bound = query_bound(config.algorithm, inst, *opt, from_fixture);
        rec.status = bound && rec.queries > *bound ? "bound-violated" : "ok";
    }
    return rec;
}

CompeteReport compete(const ExperimentConfig& config) {
    if (config.trials == 0) throw ConfigError("trials must be positive");
    prepare_trial(config, 0);  // surfaces configuration errors before any work starts

    CompeteReport report;
    report.opt_source = opt_source_for(config);
    report.records.resize(config.trials);

    auto threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, config.trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (auto i = next++; i < config.trials; i = next++) {
                    try {
                        report.records[i] = run_trial(config, i);
                    } catch (...) {
                        const std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = config.trials;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& rec : report.records) {
        report.max_ratio = std::max(report.max_ratio, rec.ratio());
        report.max_gap = std::max(report.max_gap, rec.gap());
        if (rec.status == "bound-violated" || rec.status == "opt-unknown") ++report.violations;
        if (rec.status == "budget-exceeded") {
            ++report.budget_exceeded;
            ++report.violations;
        }
    }
    return report;
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
    ExperimentConfig c;
    try {
        c.algorithm = j.at("algorithm").get<std::string>();
        c.generator.model = model_from_json(j.at("model"));
        c.generator.problem = parse_problem(j.value("problem", std::string("min")));
        c.generator.n = j.value("n", c.generator.n);
        c.generator.vertices = j.value("vertices", c.generator.vertices);
        c.generator.block_width = j.value("block_width", c.generator.block_width);
        c.generator.overlap = j.value("overlap", c.generator.overlap);
        c.generator.point_fraction = j.value("point_fraction", c.generator.point_fraction);
        c.generator.tie_prone = j.value("tie_prone", c.generator.tie_prone);
        c.n_min = j.value("n_min", c.n_min);
        c.oracle = j.value("oracle", c.oracle);
        c.trials = j.value("trials", c.trials);
        c.seed = j.value("seed", c.seed);
        if (j.contains("budget") && !j["budget"].is_null()) c.budget = j["budget"].get<std::size_t>();
        if (j.contains("max_total") && !j["max_total"].is_null()) c.max_total = j["max_total"].get<std::size_t>();
        c.threads = j.value("threads", c.threads);
        c.output = j.value("output", c.output);
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad experiment config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad experiment config: ") + e.what());
    }
    return c;
}

Json ExperimentConfig::to_json() const {
    Json j;
    j["algorithm"] = algorithm;
    j["model"] = generator.model.str();
    j["problem"] = problem_str(generator.problem);
    j["n"] = generator.n;
    if (n_min != 0) j["n_min"] = n_min;
    if (generator.vertices != 0) j["vertices"] = generator.vertices;
    j["block_width"] = generator.block_width;
    j["overlap"] = generator.overlap;
    j["point_fraction"] = generator.point_fraction;
    j["tie_prone"] = generator.tie_prone;
    j["oracle"] = oracle;
    j["trials"] = trials;
    j["seed"] = seed;
    j["budget"] = budget ? Json(*budget) : Json(nullptr);
    j["max_total"] = max_total ? Json(*max_total) : Json(nullptr);
    return j;
}

std::string report_emit(const std::vector<TrialRecord>& records, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << kCsvHeader << '\n';
        for (const auto& r : records) {
            out << r.trial << ',' << r.algorithm << ',' << r.model << ',' << r.n << ',' << r.k << ',' << r.queries
                << ',' << r.opt << ',' << format_ratio(r.ratio()) << ',' << r.gap() << ',' << r.status << '\n';
        }
        return out.str();
    }
    Json arr = Json::array();
    for (const auto& r : records) {
        arr.push_back(Json{{"trial", r.trial},
                           {"algorithm", r.algorithm},
                           {"model", r.model},
                           {"n", r.n},
                           {"k", r.k},
                           {"queries", r.queries},
                           {"opt", r.opt},
                           {"ratio", r.ratio()},
                           {"gap", r.gap()},
                           {"status", r.status}});
    }
    return dump(Json{{"records", std::move(arr)}});
}

std::string report_emit(const CompeteReport& report, const ExperimentConfig& config, ReportFormat format) {
    if (format == ReportFormat::Csv) return report_emit(report.records, format);
    auto j = Json::parse(report_emit(report.records, format));
    Json out;
    out["config"] = config.to_json();
    out["opt_source"] = report.opt_source;
    out["summary"] = Json{{"trials", report.records.size()},
                          {"max_ratio", std::stod(format_ratio(report.max_ratio))},
                          {"max_gap", report.max_gap},
                          {"violations", report.violations},
                          {"budget_exceeded", report.budget_exceeded}};
    out["records"] = std::move(j["records"]);
    return dump(out);
}

std::vector<TrialRecord> records_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw IoError("CSV header mismatch");
    std::vector<TrialRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 10) throw IoError("CSV row has " + std::to_string(f.size()) + " fields: " + line);
        TrialRecord r;
        r.trial = std::stoull(f[0]);
        r.algorithm = f[1];
        r.model = f[2];
        r.n = std::stoull(f[3]);
        r.k = std::stoull(f[4]);
        r.queries = std::stoull(f[5]);
        r.opt = std::stoull(f[6]);
        r.status = f[9];
        if (format_ratio(r.ratio()) != f[7] || std::to_string(r.gap()) != f[8]) {
            throw IoError("CSV row has inconsistent ratio or gap: " + line);
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<TrialRecord> records_from_json(const Json& j) {
    std::vector<TrialRecord> records;
    for (const auto& o : j.at("records")) {
        TrialRecord r;
        r.trial = o.at("trial").get<std::size_t>();
        r.algorithm = o.at("algorithm").get<std::string>();
        r.model = o.at("model").get<std::string>();
        r.n = o.at("n").get<std::size_t>();
        r.k = o.at("k").get<std::size_t>();
        r.queries = o.at("queries").get<std::size_t>();
        r.opt = o.at("opt").get<std::size_t>();
        r.status = o.at("status").get<std::string>();
        if (o.at("gap").get<long long>() != r.gap() || o.at("ratio").get<double>() != r.ratio()) {
            throw IoError("JSON record " + std::to_string(r.trial) + " has inconsistent ratio or gap");
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace ivq

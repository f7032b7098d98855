#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubpart/core.hpp"
#include "cubpart/datasets.hpp"
#include "cubpart/engine.hpp"
#include "cubpart/io.hpp"
#include "cubpart/stats.hpp"

namespace {

using namespace cubpart;

std::set<Condition> parse_conditions(const std::string& list)
{
    std::set<Condition> enabled;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        auto cond = condition_from_name(token);
        if (!cond) {
            std::ostringstream msg;
            msg << "unknown condition '" << token << "'; valid names are:";
            for (Condition c : all_conditions())
                msg << ' ' << condition_name(c);
            throw CLI::ValidationError("--conditions", msg.str());
        }
        enabled.insert(*cond);
    }
    if (enabled.empty())
        throw CLI::ValidationError("--conditions", "no conditions given");
    return enabled;
}

std::vector<double> parse_values(const std::string& list)
{
    std::vector<double> values;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--values", "not a number: '" + token + "'");
        }
    }
    return values;
}

PreprocessConfig make_config(const std::string& conditions, const std::string& only,
                             int expensive_limit)
{
    PreprocessConfig cfg;
    if (!only.empty())
        cfg.enabled = parse_conditions(only);
    else if (!conditions.empty())
        cfg.enabled = parse_conditions(conditions);
    cfg.expensive_size_limit = expensive_limit;
    return cfg;
}

struct GenerateOptions
{
    std::string family;
    int scale = 1;
    int points = 45;
    double alpha = -1.0;
    double beta = -1.0;
    double sigma = 0.05;
    std::uint64_t seed = 0;
    std::string out;
    std::string points_csv;
};

CostFunction build_instance(const GenerateOptions& opt, std::vector<Point>* points,
                            std::vector<int>* vertex_of)
{
    if (opt.family == "partition") {
        if (opt.alpha < 0.0)
            throw CLI::ValidationError("--alpha", "required for the partition family");
        if (opt.beta < 0.0)
            throw CLI::ValidationError("--beta", "required for the partition family");
        PartitionDatasetParams params{opt.scale, opt.alpha, opt.beta, opt.seed};
        return generate_partition_instance(params);
    }
    GeometricDatasetParams params;
    params.sigma = opt.sigma;
    params.points_per_vertex = std::max(1, (opt.points + 4) / 9);
    params.seed = opt.seed;
    GeometricInstance inst = generate_geometric_instance(params);
    if (points)
        *points = inst.points;
    if (vertex_of)
        *vertex_of = inst.vertex_of;
    return inst.costs;
}

int cmd_generate(const GenerateOptions& opt)
{
    std::vector<Point> points;
    std::vector<int> vertex_of;
    CostFunction c = build_instance(opt, &points, &vertex_of);
    if (opt.out.empty())
        write_instance_json(std::cout, c);
    else
        write_instance_file(opt.out, c);
    if (!opt.points_csv.empty()) {
        if (opt.family != "geometric")
            throw CLI::ValidationError("--points-csv", "only the geometric family has points");
        std::ofstream csv(opt.points_csv);
        if (!csv)
            throw std::runtime_error("cannot open " + opt.points_csv);
        write_points_csv(csv, points, vertex_of);
    }
    return 0;
}

int cmd_solve_exact(const std::string& in_path, int oracle_bound, const std::string& out_path)
{
    CostFunction c = read_instance_file(in_path);
    ExactSolution sol = solve_exact(c, oracle_bound);
    Partition parts = partition_from_labeling(sol.labeling);
    nlohmann::ordered_json doc;
    doc["value"] = sol.value;
    doc["blocks"] = parts.blocks;
    if (out_path.empty())
        std::cout << doc.dump(2) << '\n';
    else {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot open " + out_path);
        out << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_preprocess(const std::string& in_path, const PreprocessConfig& cfg,
                   const std::string& report_path, const std::string& reduced_prefix)
{
    CostFunction c = read_instance_file(in_path);
    PreprocessResult result = preprocess(c, cfg);

    std::string report = report_to_json(result.report);
    if (report_path.empty())
        std::cout << report << '\n';
    else {
        std::ofstream out(report_path);
        if (!out)
            throw std::runtime_error("cannot open " + report_path);
        out << report << '\n';
    }

    if (!reduced_prefix.empty()) {
        nlohmann::ordered_json map_doc = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < result.leaves.size(); ++k) {
            const ReducedInstance& leaf = result.leaves[k];
            std::string path = reduced_prefix + "_" + std::to_string(k) + ".json";
            write_instance_file(path, leaf.costs);
            nlohmann::ordered_json entry;
            entry["file"] = path;
            entry["origin"] = leaf.origin;
            map_doc.push_back(std::move(entry));
        }
        std::ofstream map_out(reduced_prefix + "_map.json");
        if (!map_out)
            throw std::runtime_error("cannot open map file");
        map_out << map_doc.dump(2) << '\n';
    }
    return 0;
}

struct ExperimentOptions
{
    std::string family;
    std::string sweep;
    std::vector<double> values;
    int scale = 1;
    int points = 45;
    double alpha = 0.5;
    double beta = 0.5;
    double sigma = 0.05;
    int seeds = 30;
    std::uint64_t seed_base = 0;
    int threads = 1;
    std::string out_prefix;
    PreprocessConfig cfg;
};

int cmd_experiment(const ExperimentOptions& opt)
{
    struct Sample
    {
        double pairs_pct = 0.0;
        double triples_pct = 0.0;
        double runtime_ms = 0.0;
    };
    const std::size_t per_value = static_cast<std::size_t>(opt.seeds);
    std::vector<std::vector<Sample>> samples(opt.values.size(),
                                             std::vector<Sample>(per_value));

    struct Task
    {
        std::size_t value_idx;
        std::size_t seed_idx;
    };
    std::vector<Task> tasks;
    for (std::size_t v = 0; v < opt.values.size(); ++v)
        for (std::size_t s = 0; s < per_value; ++s)
            tasks.push_back({v, s});

    auto run_task = [&](const Task& task) {
        GenerateOptions gen;
        gen.family = opt.family;
        gen.scale = opt.scale;
        gen.points = opt.points;
        gen.alpha = opt.alpha;
        gen.beta = opt.beta;
        gen.sigma = opt.sigma;
        gen.seed = opt.seed_base + task.seed_idx;
        double value = opt.values[task.value_idx];
        if (opt.sweep == "alpha")
            gen.alpha = value;
        else if (opt.sweep == "beta")
            gen.beta = value;
        else if (opt.sweep == "sigma")
            gen.sigma = value;
        else if (opt.sweep == "n") {
            gen.scale = static_cast<int>(value);
            gen.points = static_cast<int>(value);
        }
        CostFunction c = build_instance(gen, nullptr, nullptr);
        PreprocessResult result = preprocess(c, opt.cfg);
        samples[task.value_idx][task.seed_idx] = {result.report.pairs_fixed_pct,
                                                  result.report.triples_fixed_pct,
                                                  result.report.elapsed_ms};
    };

    const int workers = std::max(1, opt.threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= tasks.size())
                        return;
                    run_task(tasks[k]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);

    auto write_stat = [&](const std::string& suffix, auto&& pick) {
        std::string path = opt.out_prefix + "_" + suffix + ".csv";
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot open " + path);
        out << opt.sweep << ",median,q25,q75\n";
        out << std::setprecision(12);
        for (std::size_t v = 0; v < opt.values.size(); ++v) {
            std::vector<double> data;
            for (const Sample& s : samples[v])
                data.push_back(pick(s));
            out << opt.values[v] << ',' << quantile(data, 0.5) << ','
                << quantile(data, 0.25) << ',' << quantile(data, 0.75) << '\n';
        }
    };
    write_stat("vars", [](const Sample& s) { return s.pairs_pct; });
    write_stat("triples", [](const Sample& s) { return s.triples_pct; });
    write_stat("runtimes", [](const Sample& s) { return s.runtime_ms; });
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"partial-optimality preprocessing for cubic set partition instances"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "generate a synthetic instance");
    generate->add_option("--family", gen.family, "partition or geometric")
        ->required()
        ->check(CLI::IsMember({"partition", "geometric"}));
    generate->add_option("--n", gen.scale, "partition family block scale (|S| = 8n)");
    generate->add_option("--points", gen.points, "geometric family total point count");
    generate->add_option("--alpha", gen.alpha, "partition noise level in [0,1]");
    generate->add_option("--beta", gen.beta, "partition pair/triple weighting in [0,1]");
    generate->add_option("--sigma", gen.sigma, "geometric noise standard deviation");
    generate->add_option("--seed", gen.seed, "random seed")->envname("CUBPART_SEED");
    generate->add_option("--out", gen.out, "instance output path (default stdout)");
    generate->add_option("--points-csv", gen.points_csv, "also write the sampled points");

    std::string solve_in, solve_out;
    int oracle_bound = kDefaultOracleBound;
    auto* solve = app.add_subcommand("solve-exact", "exhaustive solve at oracle scale");
    solve->add_option("--in", solve_in, "instance file")->required();
    solve->add_option("--oracle-bound", oracle_bound, "largest admissible n");
    solve->add_option("--out", solve_out, "solution output path (default stdout)");

    std::string pre_in, pre_report, pre_reduced, pre_conditions, pre_only;
    int pre_expensive = -1;
    auto* pre = app.add_subcommand("preprocess", "fix variables and shrink the instance");
    pre->add_option("--in", pre_in, "instance file")->required();
    pre->add_option("--conditions", pre_conditions, "comma-separated conditions to enable");
    pre->add_option("--only", pre_only, "shorthand for a single enabled condition");
    pre->add_option("--report", pre_report, "report output path (default stdout)");
    pre->add_option("--reduced-prefix", pre_reduced, "write reduced instances to this prefix");
    pre->add_option("--expensive-limit", pre_expensive,
                    "skip the two expensive triple joins above this size (-1: never)");

    ExperimentOptions exp;
    std::string exp_conditions, exp_only;
    int exp_expensive = -1;
    auto* experiment = app.add_subcommand("experiment", "sweep a parameter and emit CSV stats");
    experiment->add_option("--family", exp.family, "partition or geometric")
        ->required()
        ->check(CLI::IsMember({"partition", "geometric"}));
    experiment->add_option("--sweep", exp.sweep, "parameter to sweep")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "sigma", "n"}));
    std::string exp_values;
    experiment->add_option("--values", exp_values, "comma-separated swept values")->required();
    experiment->add_option("--n", exp.scale, "partition block scale");
    experiment->add_option("--points", exp.points, "geometric total point count");
    experiment->add_option("--alpha", exp.alpha, "fixed alpha");
    experiment->add_option("--beta", exp.beta, "fixed beta");
    experiment->add_option("--sigma", exp.sigma, "fixed sigma");
    experiment->add_option("--seeds", exp.seeds, "instances per swept value")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--seed", exp.seed_base, "base seed")->envname("CUBPART_SEED");
    experiment->add_option("--threads", exp.threads, "worker threads");
    experiment->add_option("--out-prefix", exp.out_prefix, "CSV output prefix")->required();
    experiment->add_option("--conditions", exp_conditions, "comma-separated conditions");
    experiment->add_option("--only", exp_only, "single enabled condition");
    experiment->add_option("--expensive-limit", exp_expensive,
                           "skip the two expensive triple joins above this size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed())
            return cmd_generate(gen);
        if (solve->parsed())
            return cmd_solve_exact(solve_in, oracle_bound, solve_out);
        if (pre->parsed())
            return cmd_preprocess(pre_in, make_config(pre_conditions, pre_only, pre_expensive),
                                  pre_report, pre_reduced);
        if (experiment->parsed()) {
            exp.values = parse_values(exp_values);
            exp.cfg = make_config(exp_conditions, exp_only, exp_expensive);
            return cmd_experiment(exp);
        }
    } catch (const CLI::Error& err) {
        return app.exit(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}

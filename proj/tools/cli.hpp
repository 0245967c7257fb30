#ifndef RCPLACE_TOOLS_CLI_HPP
#define RCPLACE_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcplace/rcplace.hpp"

namespace rcplace::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

inline const RequestSpec& pick_request(const Instance& inst, std::size_t index) {
    if (index >= inst.requests.size())
        throw Error("instance has " + std::to_string(inst.requests.size()) + " request(s), index " +
                    std::to_string(index) + " is out of range");
    return inst.requests[index];
}

inline nlohmann::ordered_json half_json(Half h) {
    if (h.is_integral()) return h.twice / 2;
    return h.value();
}

inline nlohmann::ordered_json segment_json(const Segment& s) {
    return nlohmann::ordered_json::array(
        {half_json(Half{s.from.x}), half_json(Half{s.from.y}), half_json(Half{s.to.x}), half_json(Half{s.to.y})});
}

}  // namespace detail

// Runs the command line. Exit codes: 0 success, 1 runtime error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free-space management and routing-conscious placement on reconfigurable chips", "rcplace"};
    app.require_subcommand(1);

    std::string distribution = "uniform5-10";
    std::string algorithm = "rcp";
    std::string bench_algorithm = "all";
    std::string format;
    std::string out_path;
    std::string instance_path;
    std::uint64_t seed = 1;
    std::size_t runs = 1;
    std::size_t jobs = 1;
    std::size_t request_index = 0;

    const std::vector<std::string> dist_names = [] {
        std::vector<std::string> v;
        for (auto d : bench::all_distributions) v.emplace_back(bench::to_string(d));
        return v;
    }();
    std::vector<std::string> dist_or_all = dist_names;
    dist_or_all.emplace_back("all");

    auto* gen = app.add_subcommand("generate", "Write a random benchmark instance");
    gen->add_option("--distribution", distribution, "Module size distribution")->check(CLI::IsMember(dist_names));
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--out", out_path, "Output file (default: standard output)");

    auto* plc = app.add_subcommand("place", "Place one request of an instance file");
    plc->add_option("--instance", instance_path, "Instance file")->required();
    plc->add_option("--request", request_index, "Index of the request to place");
    plc->add_option("--algorithm", algorithm, "Placement algorithm")->check(CLI::IsMember({"rcp", "kff", "nao"}));
    plc->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* sim = app.add_subcommand("simulate", "Run the temporal placement simulation on an instance file");
    sim->add_option("--instance", instance_path, "Instance file")->required();
    sim->add_option("--algorithm", algorithm, "Placement algorithm or all")
        ->check(CLI::IsMember({"rcp", "kff", "nao", "all"}));
    sim->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sim->add_option("--out", out_path, "Output file (default: standard output)");

    auto* ben = app.add_subcommand("bench", "Generate instances and compare all algorithms");
    ben->add_option("--distribution", distribution, "Module size distribution or all")
        ->check(CLI::IsMember(dist_or_all));
    ben->add_option("--runs", runs, "Instances per distribution")->check(CLI::PositiveNumber);
    ben->add_option("--seed", seed, "Seed of the first instance");
    ben->add_option("--algorithm", bench_algorithm, "Placement algorithm or all")
        ->check(CLI::IsMember({"rcp", "kff", "nao", "all"}));
    ben->add_option("--jobs", jobs, "Parallel instance workers")->check(CLI::PositiveNumber);
    ben->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    ben->add_option("--out", out_path, "Output file (default: standard output)");

    auto* dump = app.add_subcommand("contour-dump", "Print the free-space contour for one request");
    dump->add_option("--instance", instance_path, "Instance file")->required();
    dump->add_option("--request", request_index, "Index of the request");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    auto algorithms_for = [&](const std::string& name) {
        std::vector<bench::Algorithm> v;
        if (name == "all")
            v.assign(std::begin(bench::all_algorithms), std::end(bench::all_algorithms));
        else
            v.push_back(*bench::algorithm_from_string(name));
        return v;
    };

    try {
        if (gen->parsed()) {
            const Instance inst = bench::generate(*bench::distribution_from_string(distribution), seed);
            detail::write_output(out_path, write_instance(inst), out);
        } else if (plc->parsed()) {
            const Instance inst = parse_instance(detail::read_file(instance_path));
            const RequestSpec& spec = detail::pick_request(inst, request_index);
            const PlacementRequest req = resolve_request(inst, spec);
            const std::vector<PlacedModule> layout = placed_modules(inst);
            const PlacementResult res = bench::run_algorithm(*bench::algorithm_from_string(algorithm), inst.chip, layout, req);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["request"] = spec.id;
                j["algorithm"] = algorithm;
                j["status"] = res.placed() ? "placed" : "rejected";
                if (res.placed()) {
                    j["center"] = {detail::half_json(res.x), detail::half_json(res.y)};
                    j["cost"] = detail::half_json(res.cost);
                }
                j["candidates"] = res.candidates;
                out << j.dump(2) << "\n";
            } else {
                out << "request " << spec.id << "\n";
                out << "status " << (res.placed() ? "placed" : "rejected") << "\n";
                if (res.placed()) {
                    out << "center " << res.x << " " << res.y << "\n";
                    out << "cost " << res.cost << "\n";
                }
                out << "candidates " << res.candidates << "\n";
            }
        } else if (sim->parsed()) {
            const Instance inst = parse_instance(detail::read_file(instance_path));
            std::ostringstream text;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            if (format != "json") text << "algorithm,time_ms,placed,rejected,avg_cost,rejection_pct\n";
            for (auto a : algorithms_for(algorithm)) {
                const bench::SimulationReport rep = bench::simulate(inst, a);
                if (format == "json") {
                    rows.push_back({{"algorithm", bench::to_string(a)},
                                    {"time_ms", rep.time_ms},
                                    {"placed", rep.placed},
                                    {"rejected", rep.rejected},
                                    {"avg_cost", rep.avg_cost()},
                                    {"rejection_pct", rep.rejection_pct()}});
                } else {
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "%s,%.3f,%zu,%zu,%.3f,%.1f\n",
                                  std::string(bench::to_string(a)).c_str(), rep.time_ms, rep.placed, rep.rejected,
                                  rep.avg_cost(), rep.rejection_pct());
                    text << buf;
                }
            }
            detail::write_output(out_path, format == "json" ? rows.dump(2) + "\n" : text.str(), out);
        } else if (ben->parsed()) {
            std::vector<bench::Distribution> dists;
            if (distribution == "all")
                dists.assign(std::begin(bench::all_distributions), std::end(bench::all_distributions));
            else
                dists.push_back(*bench::distribution_from_string(distribution));
            const auto rows = bench::run_bench(dists, runs, seed, algorithms_for(bench_algorithm), jobs);
            std::ostringstream text;
            if (format == "json") {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& r : rows)
                    arr.push_back({{"distribution", bench::to_string(r.distribution)},
                                   {"seed", r.seed},
                                   {"algorithm", bench::to_string(r.algorithm)},
                                   {"time_ms", r.time_ms},
                                   {"avg_cost", r.avg_cost},
                                   {"rejection_pct", r.rejection_pct}});
                text << arr.dump(2) << "\n";
            } else {
                text << bench::csv_header << "\n";
                for (const auto& r : rows) text << bench::csv_row(r) << "\n";
            }
            detail::write_output(out_path, text.str(), out);
        } else if (dump->parsed()) {
            const Instance inst = parse_instance(detail::read_file(instance_path));
            const RequestSpec& spec = detail::pick_request(inst, request_index);
            const std::vector<PlacedModule> layout = placed_modules(inst);
            const ExpandedScene scene = to_internal(inst.chip, layout, spec.w, spec.h);
            const Contour contour = find_contour_segments(scene);
            nlohmann::ordered_json j;
            j["request"] = spec.id;
            const Rect& f = scene.shrunk_chip;
            j["shrunk_chip"] = {detail::half_json(Half{f.left()}), detail::half_json(Half{f.bottom()}),
                                detail::half_json(Half{f.right()}), detail::half_json(Half{f.top()})};
            nlohmann::ordered_json expanded = nlohmann::ordered_json::array();
            for (const ExpandedModule& m : scene.modules)
                expanded.push_back({detail::half_json(Half{m.box.left()}), detail::half_json(Half{m.box.bottom()}),
                                    detail::half_json(Half{m.box.right()}), detail::half_json(Half{m.box.top()})});
            j["expanded_modules"] = std::move(expanded);
            nlohmann::ordered_json v = nlohmann::ordered_json::array(), h = nlohmann::ordered_json::array();
            for (const Segment& s : contour.vertical) v.push_back(detail::segment_json(s));
            for (const Segment& s : contour.horizontal) h.push_back(detail::segment_json(s));
            j["vertical"] = std::move(v);
            j["horizontal"] = std::move(h);
            out << j.dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rcplace::cli

#endif  // RCPLACE_TOOLS_CLI_HPP

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmn/ca_schemes.hpp"
#include "wmn/conflict.hpp"
#include "wmn/errors.hpp"
#include "wmn/estimators.hpp"
#include "wmn/eval.hpp"
#include "wmn/fixtures.hpp"
#include "wmn/io.hpp"
#include "wmn/model.hpp"
#include "wmn/perf_proxy.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
    int impact = 2;
    std::uint64_t seed = 1;
    std::string output;
    bool as_json = false;
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        wmn::write_text_file(output_path, text);
    }
}

std::string format2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string format_value(double v) {
    std::ostringstream ss;
    ss.precision(10);
    ss << v;
    return ss.str();
}

wmn::ConflictMode parse_mode(const std::string& mode) {
    if (mode == "conventional") return wmn::ConflictMode::conventional;
    if (mode == "colocation") return wmn::ConflictMode::colocation_aware;
    throw wmn::ValidationError("mode must be conventional or colocation");
}

std::string link_names(const wmn::WmnGraph& g, const wmn::Link& l) {
    return g.name(l.a) + "-" + g.name(l.b);
}

json link_json(const wmn::WmnGraph& g, const wmn::Link& l) {
    return json::array({g.name(l.a), g.name(l.b)});
}

void run_estimate(const GlobalOpts& go, const std::string& network_path,
                  const std::string& ca_path, const std::string& metric,
                  const std::string& mode, bool detail, std::uint64_t cap) {
    auto net = wmn::load_network(network_path);
    auto lcm = wmn::load_assignment(ca_path, net.graph).to_link_map(net.graph);
    auto dead = lcm.dead_links();

    json out;
    out["metric"] = metric;
    out["impact"] = go.impact;
    auto dj = json::array();
    for (const auto& l : dead) dj.push_back(link_json(net.graph, l));
    out["dead_links"] = dj;

    std::ostringstream text;
    text << "metric: " << metric << "\n";
    text << "impact: " << go.impact << "\n";

    if (metric == "cxls") {
        auto r = wmn::cxls_wt(net.graph, lcm, go.impact, cap);
        out["value"] = r.total;
        out["sets"] = r.per_set.size();
        out["sampled"] = r.any_sampled;
        text << "value: " << format_value(r.total) << "\n";
        text << "sets: " << r.per_set.size() << "\n";
        if (r.per_set.empty()) {
            text << "warning: no link set of " << go.impact
                 << " consecutive links exists; comparisons on this network are meaningless\n";
        }
        if (r.any_sampled) text << "note: some set weights are sampled estimates\n";
        if (detail) {
            auto pj = json::array();
            text << "per-set weights:\n";
            for (const auto& [set, w] : r.per_set) {
                std::string path;
                for (wmn::NodeId n : set.nodes()) {
                    if (!path.empty()) path += "-";
                    path += net.graph.name(n);
                }
                text << "  " << path << ": " << format_value(w.value)
                     << (w.dead ? " (dead link)" : "") << (w.sampled ? " (sampled)" : "") << "\n";
                pj.push_back({{"path", path},
                              {"weight", w.value},
                              {"dead", w.dead},
                              {"sampled", w.sampled}});
            }
            out["per_set"] = pj;
        }
    } else if (metric == "cdal") {
        double v = wmn::cdal_cost(net.graph, lcm, net.channels);
        out["value"] = v;
        text << "value: " << format_value(v) << "\n";
    } else if (metric == "tid") {
        auto cg = wmn::build_conflict_graph(net.graph, lcm, go.impact, parse_mode(mode));
        double v = wmn::total_interference_degree(cg);
        out["value"] = v;
        out["mode"] = mode;
        text << "mode: " << mode << "\n";
        text << "value: " << format_value(v) << "\n";
    } else {
        throw wmn::ValidationError("metric must be cxls, cdal or tid");
    }

    if (!dead.empty()) {
        text << "dead links (no common channel):";
        for (const auto& l : dead) text << " " << link_names(net.graph, l);
        text << "\n";
    }
    emit(go.as_json ? out.dump(2) + "\n" : text.str(), go.output);
}

void run_conflicts(const GlobalOpts& go, const std::string& network_path,
                   const std::string& ca_path, const std::string& mode) {
    auto net = wmn::load_network(network_path);
    auto lcm = wmn::load_assignment(ca_path, net.graph).to_link_map(net.graph);
    auto cg = wmn::build_conflict_graph(net.graph, lcm, go.impact, parse_mode(mode));

    json out;
    out["mode"] = mode;
    out["impact"] = go.impact;
    out["links"] = cg.vertices().size();
    out["tid"] = wmn::total_interference_degree(cg);
    auto cj = json::array();
    for (const auto& [i, j] : cg.conflict_pairs()) {
        cj.push_back(json::array(
            {link_json(net.graph, cg.vertices()[i]), link_json(net.graph, cg.vertices()[j])}));
    }
    out["conflicts"] = cj;

    std::ostringstream text;
    text << "mode: " << mode << "\n";
    text << "impact: " << go.impact << "\n";
    text << "links: " << cg.vertices().size() << "\n";
    text << "tid: " << format_value(wmn::total_interference_degree(cg)) << "\n";
    text << "conflicts:\n";
    for (const auto& [i, j] : cg.conflict_pairs()) {
        text << "  " << link_names(net.graph, cg.vertices()[i]) << " x "
             << link_names(net.graph, cg.vertices()[j]) << "\n";
    }
    emit(go.as_json ? out.dump(2) + "\n" : text.str(), go.output);
}

void run_generate(const GlobalOpts& go, const std::string& network_path, const std::string& kind,
                  const std::string& objective, int per_node, std::uint64_t cap) {
    auto net = wmn::load_network(network_path);
    wmn::CaGenSpec spec;
    spec.seed = go.seed;
    spec.radios_per_node = per_node;
    spec.impact_factor = go.impact;
    spec.candidate_cap = cap;
    if (objective == "min-tid") {
        spec.objective = wmn::CaObjective::min_tid;
    } else if (objective == "max-cxls") {
        spec.objective = wmn::CaObjective::max_cxls;
    } else {
        throw wmn::ValidationError("objective must be min-tid or max-cxls");
    }

    wmn::ChannelAssignment ca;
    if (kind == "random") {
        spec.kind = wmn::CaKind::random;
        ca = wmn::generate_random_ca(net.graph, net.channels, spec);
    } else if (kind == "greedy") {
        spec.kind = wmn::CaKind::greedy;
        ca = wmn::generate_greedy_ca(net.graph, net.channels, spec);
    } else if (kind == "exhaustive") {
        spec.kind = wmn::CaKind::exhaustive;
        auto r = wmn::generate_exhaustive_ca(net.graph, net.channels, spec);
        ca = r.ca;
        std::cerr << "searched " << r.candidates << " assignments; best " << objective << " = "
                  << format_value(r.objective) << "\n";
    } else {
        throw wmn::ValidationError("kind must be random, greedy or exhaustive");
    }
    wmn::validate_assignment(net.graph, net.channels, ca);
    emit(wmn::serialize_assignment(net.graph, ca), go.output);
}

void run_simulate(const GlobalOpts& go, const std::string& network_path,
                  const std::string& ca_path, const std::string& flows_path, int scenario,
                  int demand, int slots, int episodes, int ttl, const std::string& mode) {
    auto net = wmn::load_network(network_path);
    auto lcm = wmn::load_assignment(ca_path, net.graph).to_link_map(net.graph);

    std::vector<wmn::FlowSpec> flows;
    if ((flows_path.empty()) == (scenario == 0)) {
        throw wmn::ValidationError("exactly one of --flows and --scenario is required");
    }
    if (scenario != 0) {
        flows = wmn::grid_scenario_flows(net.graph, scenario, demand);
    } else {
        for (const auto& req : wmn::load_flows(flows_path, net.graph)) {
            wmn::FlowSpec f;
            f.source = req.source;
            f.destination = req.destination;
            f.demand = req.demand;
            f.route = req.route.empty() ? wmn::shortest_route(net.graph, req.source,
                                                              req.destination)
                                        : req.route;
            flows.push_back(std::move(f));
        }
    }

    wmn::ProxyOptions opts;
    opts.ttl = ttl;
    opts.mode = parse_mode(mode);
    auto r = wmn::run_proxy_episodes(net.graph, lcm, flows, go.impact, slots, go.seed, episodes,
                                     opts);

    json out;
    out["impact"] = go.impact;
    out["slots"] = slots;
    out["episodes"] = episodes;
    out["flows"] = flows.size();
    out["throughput"] = r.throughput_proxy;
    out["plr"] = r.plr_proxy;
    out["delay"] = r.delay_proxy;
    out["injected"] = r.injected;
    out["delivered"] = r.delivered;
    out["lost_expired"] = r.lost_expired;
    out["lost_stalled"] = r.lost_stalled;
    out["residual_queued"] = r.residual_queued;
    out["stalled_flows"] = r.stalled_flows;

    std::ostringstream text;
    text << "impact: " << go.impact << "\n";
    text << "slots: " << slots << ", episodes: " << episodes << ", flows: " << flows.size()
         << "\n";
    text << "throughput: " << format_value(r.throughput_proxy) << " packets/slot\n";
    text << "plr: " << format_value(r.plr_proxy) << "\n";
    text << "delay: " << format_value(r.delay_proxy) << " slots\n";
    text << "packets: injected " << r.injected << ", delivered " << r.delivered << ", expired "
         << r.lost_expired << ", stalled " << r.lost_stalled << ", queued " << r.residual_queued
         << "\n";
    if (!r.stalled_flows.empty()) {
        text << "stalled flows (dead hop):";
        for (int i : r.stalled_flows) text << " " << i;
        text << "\n";
    }
    emit(go.as_json ? out.dump(2) + "\n" : text.str(), go.output);
}

void run_evaluate(const GlobalOpts& go, const std::string& observed_path,
                  const std::vector<std::string>& predicted_paths, const std::string& csv_prefix) {
    auto observed = wmn::load_metrics(observed_path, "observed");
    std::map<std::string, wmn::MetricValues> predicted;
    for (const auto& path : predicted_paths) {
        for (auto& [basis, vals] : wmn::load_metrics(path, "predicted")) {
            if (!predicted.emplace(basis, std::move(vals)).second) {
                throw wmn::ValidationError("prediction basis \"" + basis +
                                           "\" appears in more than one document");
            }
        }
    }
    auto rep = wmn::build_report(observed, predicted);

    json out;
    out["n"] = rep.n;
    json table = json::array();
    std::ostringstream text;
    text << "assignments: " << rep.n << "\n";
    text << "basis        metric       eis   doc\n";
    for (const auto& basis : rep.bases) {
        for (const auto& metric : rep.metrics) {
            int e = rep.eis.at({basis, metric});
            double d = rep.doc.at({basis, metric});
            char line[128];
            std::snprintf(line, sizeof(line), "%-12s %-12s %3d   %s\n", basis.c_str(),
                          metric.c_str(), e, format2(d).c_str());
            text << line;
            table.push_back({{"basis", basis}, {"metric", metric}, {"eis", e}, {"doc", d}});
        }
    }
    out["table"] = table;

    json seqs = json::object();
    for (const auto& [metric, seq] : rep.observed_sequences) {
        seqs["observed:" + metric] = seq.labels;
        if (!seq.tied.empty()) {
            text << "note: ties in observed " << metric << " broken by label:";
            for (const auto& l : seq.tied) text << " " << l;
            text << "\n";
        }
    }
    for (const auto& [basis, seq] : rep.predicted_sequences) {
        seqs["predicted:" + basis] = seq.labels;
        if (!seq.tied.empty()) {
            text << "note: ties in predicted " << basis << " broken by label:";
            for (const auto& l : seq.tied) text << " " << l;
            text << "\n";
        }
    }
    out["sequences"] = seqs;

    if (!csv_prefix.empty()) {
        for (const auto& basis : rep.bases) {
            for (const auto& metric : rep.metrics) {
                std::string path = csv_prefix + basis + "-" + metric + ".csv";
                wmn::write_text_file(path,
                                     wmn::scatter_csv(predicted.at(basis), observed.at(metric)));
                text << "wrote " << path << "\n";
            }
        }
    }
    emit(go.as_json ? out.dump(2) + "\n" : text.str(), go.output);
}

int run_reproduce(const GlobalOpts& go) {
    auto rep = wmn::check_reference_study();

    json out;
    auto cj = json::array();
    std::ostringstream text;
    for (const auto& c : rep.checks) {
        text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << format2(c.expected)
             << ", got " << format2(c.actual) << "\n";
        cj.push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    out["checks"] = cj;
    out["all_pass"] = rep.all_pass;
    text << "overall: " << (rep.all_pass ? "PASS" : "FAIL") << " (" << rep.checks.size()
         << " checks)\n";
    emit(go.as_json ? out.dump(2) + "\n" : text.str(), go.output);
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Channel-assignment interference estimation toolkit for multi-radio mesh networks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts go;
    app.add_option("--impact", go.impact, "Interference impact factor (traffic:interference 1:X)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", go.seed, "Deterministic random seed")->capture_default_str();
    app.add_option("--output", go.output, "Write the report/document here instead of stdout");
    app.add_flag("--json", go.as_json, "Machine-readable output");

    std::string network_path;
    std::string ca_path;
    std::string metric = "cxls";
    std::string mode = "conventional";
    std::string kind = "random";
    std::string objective = "min-tid";
    std::string flows_path;
    std::string observed_path;
    std::vector<std::string> predicted_paths;
    std::string csv_prefix;
    bool detail = false;
    int per_node = 0;
    std::uint64_t combination_cap = wmn::kDefaultCombinationCap;
    std::uint64_t candidate_cap = 1'000'000;
    int scenario = 0;
    int demand = 20;
    int slots = 200;
    int episodes = 1;
    int ttl = 0;

    auto* est = app.add_subcommand("estimate", "Estimate cxls, cdal or tid for an assignment");
    est->add_option("--network", network_path, "Network document")->required();
    est->add_option("--ca", ca_path, "Channel assignment document")->required();
    est->add_option("--metric", metric, "cxls, cdal or tid")->capture_default_str();
    est->add_option("--mode", mode, "Conflict mode for tid: conventional or colocation")
        ->capture_default_str();
    est->add_flag("--detail", detail, "Per-set weight breakdown (cxls only)");
    est->add_option("--cap", combination_cap, "Combination cap per link set before sampling")
        ->check(CLI::PositiveNumber);

    auto* con = app.add_subcommand("conflicts", "Emit the conflict edge list and tid");
    con->add_option("--network", network_path, "Network document")->required();
    con->add_option("--ca", ca_path, "Channel assignment document")->required();
    con->add_option("--mode", mode, "conventional or colocation")->capture_default_str();

    auto* gen = app.add_subcommand("generate", "Generate a channel assignment document");
    gen->add_option("--network", network_path, "Network document")->required();
    gen->add_option("--kind", kind, "random, greedy or exhaustive")->capture_default_str();
    gen->add_option("--objective", objective, "Exhaustive objective: min-tid or max-cxls")
        ->capture_default_str();
    gen->add_option("--per-node", per_node, "Channels per node (0 = as many as radios allow)")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--cap", candidate_cap, "Exhaustive candidate cap")
        ->check(CLI::PositiveNumber);

    auto* sim = app.add_subcommand("simulate", "Run the slot-based conflict scheduler");
    sim->add_option("--network", network_path, "Network document")->required();
    sim->add_option("--ca", ca_path, "Channel assignment document")->required();
    sim->add_option("--flows", flows_path, "Flow document (routes or source/destination pairs)");
    sim->add_option("--scenario", scenario, "Built-in 5x5 grid mix: 5, 8, 10 or 12 flows");
    sim->add_option("--demand", demand, "Packets per flow for --scenario")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim->add_option("--slots", slots, "Episode length in slots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim->add_option("--seeds", episodes, "Number of episodes (seed, seed+1, ...)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim->add_option("--ttl", ttl, "Packet time-to-live in slots (0 = no expiry)")
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--mode", mode, "conventional or colocation")->capture_default_str();

    auto* eva = app.add_subcommand("evaluate", "Rank assignments and compare sequences");
    eva->add_option("--observed", observed_path, "Observed metrics document")->required();
    eva->add_option("--predicted", predicted_paths, "Predicted metrics document(s)")
        ->required()
        ->take_all();
    eva->add_option("--csv", csv_prefix, "Write scatter CSV files with this path prefix");

    auto* rep = app.add_subcommand("reproduce-paper",
                                   "Re-check the bundled reference-study fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (est->parsed()) {
            run_estimate(go, network_path, ca_path, metric, mode, detail, combination_cap);
        } else if (con->parsed()) {
            run_conflicts(go, network_path, ca_path, mode);
        } else if (gen->parsed()) {
            run_generate(go, network_path, kind, objective, per_node, candidate_cap);
        } else if (sim->parsed()) {
            run_simulate(go, network_path, ca_path, flows_path, scenario, demand, slots, episodes,
                         ttl, mode);
        } else if (eva->parsed()) {
            run_evaluate(go, observed_path, predicted_paths, csv_prefix);
        } else if (rep->parsed()) {
            return run_reproduce(go);
        }
    } catch (const wmn::LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wmn::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "tough/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "tough/graph_io.hpp"
#include "tough/verify.hpp"

namespace tough {

namespace {

using nlohmann::json;

struct CliConfig {
    std::string format = "g6";
    int max_oracle_n = 24;
    long budget = 20000;
    int threads = 0;

    std::string t;
    std::string out_path;
    std::string cert_path;
    std::string graph_path;
    std::vector<int> path_ends;
    std::string block_kind;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw InputError("cannot write " + path);
}

json witness_json(const CutsetWitness& w)
{
    return {{"cutset", w.cutset}, {"components", w.component_count}, {"ratio", w.ratio.str()}};
}

int cmd_synth(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    Rational t;
    try {
        t = Rational::parse(cfg.t);
    } catch (const RationalError& ex) {
        err << "error: " << ex.what() << " (expected \"a/b\" or an integer)\n";
        return 2;
    }
    if (!(t > Rational(0) && t < Rational(9, 4))) {
        err << "error: t must satisfy 0 < t < 9/4 (got " << t << ")\n";
        return 2;
    }
    auto syn = build(plan(t));
    if (!cfg.out_path.empty())
        write_file(cfg.out_path, format_graph(syn.graph, parse_format(cfg.format)));
    if (!cfg.cert_path.empty())
        write_file(cfg.cert_path, to_json(syn.certificate).dump(2) + "\n");
    const auto& p = syn.certificate.plan;
    out << "case " << to_string(p.case_id) << " n=" << syn.graph.n() << " tau=" << syn.certificate.predicted_tau
        << " q=" << p.q << "\n";
    return 0;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out)
{
    Graph g = read_graph_file(cfg.graph_path);
    std::ifstream f(cfg.cert_path);
    if (!f)
        throw InputError("cannot open " + cfg.cert_path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& ex) {
        throw CertificateError(std::string("certificate JSON: ") + ex.what());
    }
    Certificate c = certificate_from_json(j);
    c.n = g.n();
    VerifyLimits limits;
    limits.max_oracle_n = cfg.max_oracle_n;
    limits.hamilton.node_budget = std::max(cfg.budget, 1000L) * 1000;
    auto report = check_certificate(g, c, limits);
    out << to_json(report).dump(2) << "\n";
    return report.accepted() ? 0 : 1;
}

int cmd_tau(const CliConfig& cfg, std::ostream& out)
{
    Graph g = read_graph_file(cfg.graph_path);
    if (g.is_complete()) {
        out << json{{"tau", "infinite"}, {"method", "exact"}}.dump() << "\n";
        return 0;
    }
    if (g.n() <= cfg.max_oracle_n) {
        auto res = toughness_exact(g, cfg.max_oracle_n);
        out << json{{"tau", res.value.str()}, {"method", "exact"}, {"witness", witness_json(*res.witness)}}.dump()
            << "\n";
        return 0;
    }
    auto w = toughness_upper_search(g, cfg.budget);
    if (!w)
        throw std::runtime_error("no separating set found within budget");
    out << json{{"tau_upper_bound", w->ratio.str()}, {"method", "heuristic"}, {"witness", witness_json(*w)}}.dump()
        << "\n";
    return 0;
}

int cmd_hamilton(const CliConfig& cfg, std::ostream& out)
{
    Graph g = read_graph_file(cfg.graph_path);
    HamiltonLimits limits;
    limits.dp_max_n = std::min(cfg.max_oracle_n, 26);
    limits.node_budget = std::max(cfg.budget, 1000L) * 1000;
    json j;
    if (cfg.path_ends.size() == 2) {
        auto res = has_hamilton_path(g, cfg.path_ends[0], cfg.path_ends[1], limits);
        j["result"] = res.verdict == Verdict::yes  ? "Hamilton path"
                      : res.verdict == Verdict::no ? "no Hamilton path"
                                                   : "unknown";
        j["method"] = to_string(res.method);
        j["witness"] = res.witness;
    } else {
        auto res = is_hamiltonian(g, limits);
        j["result"] = res.verdict == Verdict::yes  ? "hamiltonian"
                      : res.verdict == Verdict::no ? "nonhamiltonian (exhaustive)"
                                                   : "unknown";
        j["method"] = to_string(res.method);
        j["witness"] = res.witness;
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_alpha(const CliConfig& cfg, std::ostream& out)
{
    Graph g = read_graph_file(cfg.graph_path);
    out << json{{"alpha", independence_number(g)}}.dump() << "\n";
    return 0;
}

int cmd_block(const CliConfig& cfg, std::ostream& out)
{
    Block b = block(parse_block_kind(cfg.block_kind));
    auto fmt = parse_format(cfg.format);
    std::string text = fmt == GraphFormat::dot ? to_dot(b.graph, VertexSet(b.graph.n(), {b.x, b.y}))
                                               : format_graph(b.graph, fmt);
    if (!cfg.out_path.empty())
        write_file(cfg.out_path, text);
    else
        out << text;
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Nonhamiltonian graphs of prescribed toughness: synthesis, oracles and certificate checks"};
    app.require_subcommand(1);
    app.add_option("--threads", cfg.threads, "OpenMP worker threads (0 = runtime default)");

    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--max-oracle-n", cfg.max_oracle_n, "largest order for exact oracles")->capture_default_str();
        sub->add_option("--budget", cfg.budget, "search budget: cutset evaluations for tau, thousands of backtracking nodes for Hamiltonicity")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "graph output format")
            ->check(CLI::IsMember({"g6", "dot", "edges", "json"}))
            ->capture_default_str();
    };

    auto* synth = app.add_subcommand("synth", "build a nonhamiltonian graph with toughness t = a/b");
    synth->add_option("t", cfg.t, "target toughness, \"a/b\" or an integer")->required();
    synth->add_option("--out", cfg.out_path, "graph output path");
    synth->add_option("--cert", cfg.cert_path, "certificate output path");
    add_format(synth);

    auto* verify = app.add_subcommand("verify", "check a graph against its certificate");
    verify->add_option("graph", cfg.graph_path)->required();
    verify->add_option("cert", cfg.cert_path)->required();
    add_limits(verify);

    auto* tau = app.add_subcommand("tau", "toughness (exact up to --max-oracle-n, heuristic upper bound above)");
    tau->add_option("graph", cfg.graph_path)->required();
    add_limits(tau);

    auto* ham = app.add_subcommand("hamilton", "Hamilton cycle, or Hamilton x-y path with --path");
    ham->add_option("graph", cfg.graph_path)->required();
    ham->add_option("--path", cfg.path_ends, "endpoints x y")->expected(2);
    add_limits(ham);

    auto* alpha = app.add_subcommand("alpha", "independence number");
    alpha->add_option("graph", cfg.graph_path)->required();

    auto* blk = app.add_subcommand("block", "print a building block (L1..L4)");
    blk->add_option("kind", cfg.block_kind)->required()->check(CLI::IsMember({"L1", "L2", "L3", "L4"}));
    blk->add_option("--out", cfg.out_path, "output path");
    add_format(blk);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream cli_out, cli_err;
        int code = app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return code == 0 ? 0 : 2;
    }

    if (cfg.threads > 0)
        omp_set_num_threads(cfg.threads);

    try {
        if (*synth)
            return cmd_synth(cfg, out, err);
        if (*verify)
            return cmd_verify(cfg, out);
        if (*tau)
            return cmd_tau(cfg, out);
        if (*ham)
            return cmd_hamilton(cfg, out);
        if (*alpha)
            return cmd_alpha(cfg, out);
        if (*blk)
            return cmd_block(cfg, out);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace tough

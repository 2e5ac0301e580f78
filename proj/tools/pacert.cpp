#include "pacert/commands.hpp"
#include "pacert/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace pacert;

namespace {

struct Flags {
    int r = 2;
    int g = 0;
    int k = 1;
    long m = 0;
    std::string m_range, j_range, out, format = "text", graph;
    std::uint64_t budget = 0, seed = 1;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--r", f.r, "number of curves in each family");
    sub->add_option("--g", f.g, "genus of the closed surface (default r + 2)");
    sub->add_option("--k", f.k, "intersection i(a_r, b_r) parameter");
    sub->add_option("--m", f.m, "twist exponent");
    sub->add_option("--budget", f.budget, "maximum strands through one band (default PACERT_BUDGET or 1e9)");
    sub->add_option("--seed", f.seed, "seed for randomised probes");
    sub->add_option("--out", f.out, "directory for report files");
    sub->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
}

RunConfig to_config(const Flags& f, const CLI::App* sub) {
    RunConfig c;
    c.r = f.r;
    if (sub->count("--g")) c.g = f.g;
    c.k = f.k;
    if (sub->count("--m")) c.m = f.m;
    if (!f.m_range.empty()) std::tie(c.m_lo, c.m_hi) = parse_range(f.m_range);
    if (!f.j_range.empty()) c.j_range = parse_range(f.j_range);
    if (sub->count("--budget")) c.budget.max_edge_weight = f.budget;
    c.seed = f.seed;
    c.out_dir = f.out;
    c.format = parse_format(f.format);
    c.graph_file = f.graph;
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-Anosov degree and obstruction certificates"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);
    Flags f;

    auto* fig = app.add_subcommand("verify-figure1", "check the genus 3 filling pair and its involution");
    add_common(fig, f);
    fig->add_option("--graph", f.graph, "ribbon graph file replacing the built-in one");

    auto* sw = app.add_subcommand("degree-sweep", "degree of the stretch factor over a range of m");
    add_common(sw, f);
    sw->add_option("--m-range", f.m_range, "lo..hi (default 1..40)");

    auto* tp = app.add_subcommand("twist-probe", "curve sequence probes for r = 2");
    add_common(tp, f);
    tp->add_option("--j-range", f.j_range, "lo..hi (default -2..n+2)");

    auto* ce = app.add_subcommand("certify", "end-to-end certificate for one (r, g, k, m)");
    add_common(ce, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        RunConfig cfg = to_config(f, sub);
        Report rep;
        if (sub == fig) rep = cmd_verify_figure1(cfg);
        else if (sub == sw) rep = cmd_degree_sweep(cfg);
        else if (sub == tp) rep = cmd_twist_probe(cfg);
        else rep = cmd_certify(cfg);
        std::cout << render(rep, cfg.format);
        for (const auto& p : write_outputs(rep, cfg)) std::cerr << "wrote " << p << "\n";
        return rep.exit_code();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const GenusBoundError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

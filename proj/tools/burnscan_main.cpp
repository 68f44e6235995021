#include "burnscan/commands.hpp"
#include "burnscan/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>

int main(int argc, char** argv) {
    CLI::App app{"burnscan: abrupt-change detection and burned-area mapping for "
                 "16-day satellite index time series"};
    // long-only help; the short -h would collide with the --h bandwidth flag
    app.set_help_flag("--help", "print help");
    app.set_version_flag("--version", burnscan::kVersion);
    app.require_subcommand(1);
    app.option_defaults()->ignore_case(false);

    burnscan::DetectCommand detect_cmd;
    auto add_subcommand = [&](CLI::App& parent, const char* name, const char* desc) {
        CLI::App* sub = parent.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    CLI::App* detect = add_subcommand(app, "detect", "per-pixel break detection over a scene");
    detect->add_option("--manifest", detect_cmd.manifest, "stack manifest JSON")->required();
    detect->add_option("--out-dir", detect_cmd.out_dir, "output directory")->required();
    detect->add_option("--h", detect_cmd.h, "bandwidth h in (0,1)");
    detect->add_option("--alpha", detect_cmd.alpha, "significance level");
    detect->add_option("--fill", detect_cmd.fill, "gap fill: linear|spline");
    detect->add_option("--harmonics", detect_cmd.harmonics, "harmonic order 1..4");
    detect->add_option("--max-breaks", detect_cmd.max_breaks, "maximum trend breaks");
    detect->add_option("--threads", detect_cmd.threads, "worker threads (0 = all)");

    burnscan::MapCommand map_cmd;
    CLI::App* map = add_subcommand(app, "map", "burned-area and severity maps from detected breaks");
    map->add_option("--manifest", map_cmd.manifest, "stack manifest JSON")->required();
    map->add_option("--detect-dir", map_cmd.detect_dir, "directory with breaks.csv")->required();
    map->add_option("--out-dir", map_cmd.out_dir, "output directory")->required();
    map->add_option("--fill", map_cmd.fill, "gap fill for the NBR stack: linear|spline");
    map->add_option("--threads", map_cmd.threads, "worker threads (0 = all)");

    burnscan::SimulateCommand sim_cmd;
    CLI::App* simulate = add_subcommand(app, "simulate", "Monte Carlo performance studies");
    simulate->add_option("--grid", sim_cmd.grid, "experiment grid JSON");
    simulate->add_option("--out-dir", sim_cmd.out_dir, "output directory");
    simulate->add_option("--replicates", sim_cmd.replicates, "override grid replicate count");
    simulate->add_option("--seed", sim_cmd.seed, "override grid seed");
    simulate->add_option("--threads", sim_cmd.threads, "worker threads (0 = all)");

    burnscan::CritvalsCommand crit_cmd;
    CLI::App* critvals =
        add_subcommand(*simulate, "critvals", "regenerate the OLS-MOSUM critical value table");
    critvals->add_option("--h", crit_cmd.hs, "bandwidths")->delimiter(',');
    critvals->add_option("--alpha", crit_cmd.alphas, "significance levels")->delimiter(',');
    critvals->add_option("--out", crit_cmd.out, "table file path")->required();
    critvals->add_option("--grid-n", crit_cmd.grid_n, "limit-process grid resolution");
    critvals->add_option("--replicates", crit_cmd.replicates, "Monte Carlo replicates");
    critvals->add_option("--seed", crit_cmd.seed, "generator seed");
    critvals->add_option("--threads", crit_cmd.threads, "worker threads (0 = all)");

    burnscan::AssessCommand assess_cmd;
    CLI::App* assess = add_subcommand(app, "assess", "accuracy of a burned-area map vs a reference");
    assess->add_option("--pred", assess_cmd.pred, "predicted burned mask (.u8)")->required();
    assess->add_option("--ref", assess_cmd.ref, "reference burned mask (.u8)")->required();
    assess->add_option("--missing", assess_cmd.missing, "missing-fraction plane (.f32)")->required();
    assess->add_option("--strata", assess_cmd.strata, "strata bounds JSON");
    assess->add_option("--region", assess_cmd.region, "region mask (.u8); default whole extent");
    assess->add_option("--out-dir", assess_cmd.out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*critvals) {
            burnscan::cmd_simulate_critvals(crit_cmd);
        } else if (*simulate) {
            if (sim_cmd.grid.empty() || sim_cmd.out_dir.empty()) {
                std::fprintf(stderr, "simulate: --grid and --out-dir are required\n");
                return 1;
            }
            burnscan::cmd_simulate(sim_cmd);
        } else if (*detect) {
            burnscan::cmd_detect(detect_cmd);
        } else if (*map) {
            burnscan::cmd_map(map_cmd);
        } else if (*assess) {
            burnscan::cmd_assess(assess_cmd);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

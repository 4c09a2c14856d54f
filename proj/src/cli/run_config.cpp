#include <cmath>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spherelab/cli.hpp"

namespace spherelab::cli {

Grid Grid::parse(const std::string& text) {
    Grid g;
    std::istringstream in(text);
    char c1 = 0;
    char c2 = 0;
    if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' || !in.eof()) {
        throw UsageError("grid must look like start:stop:count, got '" + text + "'");
    }
    if (g.count < 1 || !std::isfinite(g.start) || !std::isfinite(g.stop)) {
        throw UsageError("grid needs finite bounds and count >= 1, got '" + text + "'");
    }
    return g;
}

std::vector<double> Grid::values() const {
    std::vector<double> v;
    for (int i = 0; i < count; ++i) {
        v.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
    }
    return v;
}

namespace {

/// Reads a flat JSON object; keys are long flag names (underscores allowed).
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(input);
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConfigError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) throw CLI::ConfigError("config file must hold a JSON object");
        std::vector<CLI::ConfigItem> items;
        for (const auto& [key, value] : doc.items()) {
            CLI::ConfigItem item;
            item.name = key;
            for (char& ch : item.name) {
                if (ch == '_') ch = '-';
            }
            if (value.is_array()) {
                for (const auto& v : value) item.inputs.push_back(scalar_text(v));
            } else {
                item.inputs.push_back(scalar_text(value));
            }
            items.push_back(std::move(item));
        }
        return items;
    }

private:
    static std::string scalar_text(const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_object() || v.is_array()) throw CLI::ConfigError("config values must be scalars or flat arrays");
        return v.dump();
    }
};

}  // namespace

RunConfig parse_arguments(int argc, const char* const* argv) {
    RunConfig c;
    CLI::App app{"spherelab: Clifford-algebra and 7-sphere correlation models checked against quantum oracles"};
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file with flag values; explicit flags override it");

    std::string theta_grid;
    std::string alpha_grid;
    std::string delta_grid;

    app.add_option("command,--command", c.command,
                   "identities | qm | model | solve-hardy | scan-chsh | mc | compare")
        ->check(CLI::IsMember({"identities", "qm", "model", "solve-hardy", "scan-chsh", "mc", "compare"}));
    app.add_option("--state", c.state, "singlet | chsh | hardy | ghz3 | ghz4 | all (depends on command)");
    app.add_option("--unit", c.unit, "angle unit for every angle flag")->check(CLI::IsMember({"deg", "rad"}));
    app.add_option("--angles", c.angles, "polar azimuth pairs, one pair per site");
    app.add_option("--angles-file", c.angles_file, "JSON {\"unit\": ..., \"directions\": [[polar, azimuth], ...]}");
    app.add_option("--theta", c.theta, "Hardy state parameter");
    app.add_option("--alpha", c.alpha, "three-particle amplitude angle");
    app.add_option("--delta", c.delta, "three-particle phase");
    app.add_option("--theta-grid", theta_grid, "start:stop:count");
    app.add_option("--alpha-grid", alpha_grid, "start:stop:count");
    app.add_option("--delta-grid", delta_grid, "start:stop:count");
    app.add_option("--samples,--trials", c.samples, "random inputs (compare, identities) or ensemble trials (mc)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", c.seed, "random seed");
    app.add_option("--workers", c.workers, "worker threads for mc")->check(CLI::Range(1u, 1024u));
    app.add_option("--weight-plus", c.weight_plus, "probability of the right-handed orientation")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--table", c.table, "built-in 7D cross-product table")->check(CLI::IsMember({"cyclic", "cayley"}));
    app.add_option("--table-file", c.table_file, "7D cross-product table in JSON");
    app.add_option("--mode", c.ghz_mode, "GHZ pipeline mode")->check(CLI::IsMember({"postulated_z", "table"}));
    app.add_option("--z-e7", c.z_e7, "ê7 coefficient of the postulated deviation vector");
    app.add_flag("--strict-table", c.strict_table, "let table-mode GHZ rows decide the exit status");
    app.add_option("--b-minus", c.b_minus, "point used for outcome - along b")
        ->check(CLI::IsMember({"printed", "symmetric"}));
    app.add_option("--plane", c.plane, "plane of the CHSH sweep")->check(CLI::IsMember({"xz", "xy", "yz"}));
    app.add_option("--grid-count", c.grid_count, "angles per direction in the CHSH sweep")->check(CLI::Range(1, 64));
    app.add_option("--tol-algebraic", c.tolerances.algebraic, "tolerance of exact identities");
    app.add_option("--tol-solver", c.tolerances.solver, "tolerance of solver residuals");
    app.add_option("--tol-prediction", c.tolerances.prediction, "tolerance of solver-mediated predictions");
    app.add_option("--sigmas", c.tolerances.sigmas, "statistical tolerance in standard errors");
    app.add_option("--output,-o", c.output, "output file (default under $SPHERELAB_OUT_DIR or .)");
    app.add_option("--format", c.format, "artifact format")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (c.command.empty()) throw UsageError("a command is required\n" + app.help());
    if (!theta_grid.empty()) c.theta_grid = Grid::parse(theta_grid);
    if (!alpha_grid.empty()) c.alpha_grid = Grid::parse(alpha_grid);
    if (!delta_grid.empty()) c.delta_grid = Grid::parse(delta_grid);

    const bool has_angles = !c.angles.empty() || c.theta || c.alpha || c.delta || c.theta_grid || c.alpha_grid ||
                            c.delta_grid;
    if (has_angles && c.unit.empty()) throw UsageError("--unit deg|rad is required when angles are given");
    if (c.angles.size() % 2 != 0) throw UsageError("--angles takes polar azimuth pairs");
    return c;
}

}  // namespace spherelab::cli

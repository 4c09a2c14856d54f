#include <cmath>
#include <cstdio>
#include <algorithm>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "sampling.hpp"
#include "spherelab/cli.hpp"
#include "spherelab/lrmodel/decomposition.hpp"
#include "spherelab/lrmodel/ghz.hpp"
#include "spherelab/lrmodel/hardy.hpp"
#include "spherelab/lrmodel/singlet.hpp"
#include "spherelab/mcsim.hpp"
#include "spherelab/qmref.hpp"

namespace spherelab::cli {

namespace {

using ga3::UnitVec3;
using lrmodel::ComparisonReport;
using lrmodel::format_double;

constexpr double kTsirelson = 2.0 * std::numbers::sqrt2;
constexpr double kTsirelsonTolerance = 1e-6;

double to_radians(const RunConfig& c, double v) { return c.unit == "deg" ? v * std::numbers::pi / 180.0 : v; }
double from_radians(const RunConfig& c, double v) { return c.unit == "deg" ? v * 180.0 / std::numbers::pi : v; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<UnitVec3> directions(const RunConfig& c) {
    if (!c.angles.empty() && !c.angles_file.empty()) throw UsageError("give --angles or --angles-file, not both");
    if (!c.angles_file.empty()) {
        try {
            return qmref::observable_from_json(read_file(c.angles_file)).directions;
        } catch (const FormatError& e) {
            throw UsageError(e.what());
        }
    }
    std::vector<UnitVec3> out;
    for (std::size_t i = 0; i + 1 < c.angles.size(); i += 2) {
        out.push_back(UnitVec3::from_spherical(to_radians(c, c.angles[i]), to_radians(c, c.angles[i + 1])));
    }
    return out;
}

std::vector<UnitVec3> require_directions(const RunConfig& c, std::size_t count) {
    auto d = directions(c);
    if (d.size() != count) {
        throw UsageError("state '" + c.state + "' needs " + std::to_string(count) + " directions, got " +
                         std::to_string(d.size()));
    }
    return d;
}

/// Angle values from a single flag or a grid, converted to radians.
std::vector<double> angle_values(const RunConfig& c, const std::optional<double>& single,
                                 const std::optional<Grid>& grid, const char* name, bool required) {
    std::vector<double> raw;
    if (grid) {
        raw = grid->values();
    } else if (single) {
        raw = {*single};
    } else if (required) {
        throw UsageError(std::string("--") + name + " or --" + name + "-grid is required");
    } else {
        raw = {0.0};
    }
    for (double& v : raw) v = to_radians(c, v);
    return raw;
}

sphere7::CrossTable load_table(const RunConfig& c) {
    if (!c.table_file.empty()) {
        try {
            return sphere7::CrossTable::from_json(read_file(c.table_file));
        } catch (const FormatError& e) {
            throw UsageError(e.what());
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    return c.table == "cayley" ? sphere7::CrossTable::cayley() : sphere7::CrossTable::cyclic();
}

lrmodel::BMinusVariant b_minus(const RunConfig& c) {
    return c.b_minus == "symmetric" ? lrmodel::BMinusVariant::symmetric : lrmodel::BMinusVariant::printed;
}

/// Twelve significant digits, enough to name a grid point without unit-conversion noise.
std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string angle_label(const RunConfig& c, const char* name, double radians) {
    return std::string(name) + "=" + short_number(from_radians(c, radians)) + (c.unit.empty() ? "rad" : c.unit);
}

/// Folds rows into `into`, keeping for each label the row with the largest |residual|.
void keep_worst(ComparisonReport& into, const ComparisonReport& rows, const std::string& prefix) {
    for (const auto& r : rows.rows) {
        const std::string label = prefix + r.label;
        auto it = std::find_if(into.rows.begin(), into.rows.end(),
                               [&label](const lrmodel::ReportRow& x) { return x.label == label; });
        if (it == into.rows.end()) {
            into.rows.push_back(r);
            into.rows.back().label = label;
        } else if (!(std::abs(r.residual) <= std::abs(it->residual))) {
            *it = r;
            it->label = label;
        }
    }
}

void summarize(const ComparisonReport& report, const std::string& path, std::ostream& out) {
    std::size_t failed = 0;
    std::size_t informational_mismatch = 0;
    for (const auto& r : report.rows) {
        if (r.verdict() == lrmodel::Verdict::match) continue;
        if (r.enforced) {
            ++failed;
            out << "  MISMATCH  " << r.label << "  residual " << format_double(r.residual) << " > "
                << format_double(r.tolerance) << "\n";
        } else {
            ++informational_mismatch;
        }
    }
    out << report.rows.size() << " rows, " << failed << " enforced mismatches, " << informational_mismatch
        << " informational mismatches, max enforced residual " << format_double(report.max_enforced_residual())
        << "\nwrote " << path << "\n";
}

int emit(const ComparisonReport& report, const RunConfig& c, const std::string& stem, std::ostream& out) {
    const std::string path = resolve_output_path(c.output, stem, c.format);
    write_atomic(path, c.format == "csv" ? report.to_csv() : report.to_json());
    summarize(report, path, out);
    return report.passed() ? kExitSuccess : kExitMismatch;
}

lrmodel::GhzOptions ghz_options(const RunConfig& c, const sphere7::CrossTable& table) {
    lrmodel::GhzOptions o;
    o.mode = c.ghz_mode == "table" ? lrmodel::GhzMode::table : lrmodel::GhzMode::postulated_z;
    o.table = &table;
    o.z_e7 = c.z_e7;
    o.tolerance = c.tolerances.algebraic;
    return o;
}

void apply_strict(ComparisonReport& report, bool strict) {
    if (!strict) return;
    for (auto& r : report.rows) r.enforced = true;
}

// ---------------------------------------------------------------- qm

int command_qm(const RunConfig& c, std::ostream& out) {
    ComparisonReport report;
    report.metadata.mode = "qm";
    const double tol = c.tolerances.algebraic;
    if (c.state == "hardy") {
        for (double theta : angle_values(c, c.theta, c.theta_grid, "theta", true)) {
            for (const auto& pair : qmref::hardy_pairs()) {
                report.add("amplitude <" + qmref::label(pair) + "> " + angle_label(c, "theta", theta),
                           qmref::hardy_amplitude(theta, pair), qmref::hardy_closed_form(theta, pair), tol);
            }
        }
    } else if (c.state == "singlet") {
        const auto d = require_directions(c, 2);
        const double e = qmref::tensor_expectation(qmref::make_state(qmref::Singlet{}), {d});
        report.add("singlet E(a,b) vs -a.b", e, -ga3::dot(d[0], d[1]), tol);
    } else if (c.state == "ghz4") {
        const auto d = require_directions(c, 4);
        std::array<double, 4> polar{};
        std::array<double, 4> azimuth{};
        for (std::size_t i = 0; i < 4; ++i) {
            polar[i] = std::acos(std::clamp(d[i].z(), -1.0, 1.0));
            azimuth[i] = std::atan2(d[i].y(), d[i].x());
        }
        report.add("ghz4 expectation vs closed form",
                   qmref::tensor_expectation(qmref::make_state(qmref::Ghz4{}), {d}),
                   qmref::ghz4_closed_form(polar, azimuth), tol);
    } else if (c.state == "ghz3") {
        const auto d = require_directions(c, 3);
        std::array<double, 3> polar{};
        std::array<double, 3> azimuth{};
        for (std::size_t i = 0; i < 3; ++i) {
            polar[i] = std::acos(std::clamp(d[i].z(), -1.0, 1.0));
            azimuth[i] = std::atan2(d[i].y(), d[i].x());
        }
        for (double alpha : angle_values(c, c.alpha, c.alpha_grid, "alpha", false)) {
            for (double delta : angle_values(c, c.delta, c.delta_grid, "delta", false)) {
                report.add("ghz3 expectation vs closed form " + angle_label(c, "alpha", alpha) + " " +
                               angle_label(c, "delta", delta),
                           qmref::tensor_expectation(qmref::make_state(qmref::Ghz3{alpha, delta}), {d}),
                           qmref::ghz3_closed_form(polar, azimuth, alpha, delta), tol);
            }
        }
    } else {
        throw UsageError("qm needs --state singlet|hardy|ghz3|ghz4");
    }
    return emit(report, c, "qm-" + c.state, out);
}

// ---------------------------------------------------------------- model

void hardy_model_rows(ComparisonReport& report, const RunConfig& c, double theta, const lrmodel::HardyAngles& angles,
                      const std::string& prefix) {
    const bool solved = angles.residual_norm < c.tolerances.solver;
    report.add(prefix + "solver residual norm " + angle_label(c, "theta", theta), angles.residual_norm, 0.0,
               c.tolerances.solver, false);
    for (const auto& pair : qmref::hardy_pairs()) {
        report.add(prefix + "joint <" + qmref::label(pair) + "> vs amplitude " + angle_label(c, "theta", theta),
                   lrmodel::hardy_joint(angles, pair, b_minus(c)).value, qmref::hardy_amplitude(theta, pair),
                   c.tolerances.prediction, solved);
    }
}

int command_model(const RunConfig& c, std::ostream& out) {
    ComparisonReport report;
    const double tol = c.tolerances.algebraic;
    const auto table = load_table(c);
    report.metadata = {"model", table.id(), std::nullopt};
    if (c.state == "singlet") {
        const auto d = require_directions(c, 2);
        report.add("singlet correlation vs state-vector expectation", lrmodel::singlet_correlation(d[0], d[1]),
                   qmref::tensor_expectation(qmref::make_state(qmref::Singlet{}), {d}), tol);
        const std::array<lrmodel::Beable, 2> pair{ga3::bivector_beable(d[0], ga3::Handedness::right),
                                                  ga3::bivector_beable(d[1], ga3::Handedness::right)};
        const auto dec = lrmodel::canonical_decomposition(pair, ga3::Handedness::right);
        report.add("oriented magnitude vs |a x b|", dec.g, ga3::norm(ga3::cross(d[0], d[1])), tol);
    } else if (c.state == "chsh") {
        const auto d = require_directions(c, 4);
        const double model = lrmodel::chsh_model(d[0], d[1], d[2], d[3]);
        report.add("CHSH model vs singlet state-vector CHSH", model,
                   qmref::chsh_qm(qmref::make_state(qmref::Singlet{}), d[0], d[1], d[2], d[3]), tol);
        report.add("CHSH bound vs 2 sqrt 2", lrmodel::chsh_model_bound(d[0], d[1], d[2], d[3]), kTsirelson, tol,
                   false);
    } else if (c.state == "hardy") {
        std::optional<lrmodel::HardyAngles> previous;
        for (double theta : angle_values(c, c.theta, c.theta_grid, "theta", true)) {
            previous = lrmodel::solve_hardy(theta, previous);
            hardy_model_rows(report, c, theta, *previous, "");
        }
    } else if (c.state == "ghz4") {
        const auto d = require_directions(c, 4);
        const auto result = lrmodel::ghz4_model({d[0], d[1], d[2], d[3]}, ghz_options(c, table));
        report.metadata.mode = "model/" + result.report.metadata.mode;
        report.append(result.report);
        out << "ghz4 model value " << format_double(result.value) << "\n";
    } else if (c.state == "ghz3") {
        const auto d = require_directions(c, 3);
        for (double alpha : angle_values(c, c.alpha, c.alpha_grid, "alpha", false)) {
            for (double delta : angle_values(c, c.delta, c.delta_grid, "delta", false)) {
                const auto result = lrmodel::ghz3_model({d[0], d[1], d[2]}, alpha, delta, ghz_options(c, table));
                report.metadata.mode = "model/" + result.report.metadata.mode;
                const std::string suffix = " " + angle_label(c, "alpha", alpha) + " " + angle_label(c, "delta", delta);
                for (auto row : result.report.rows) {
                    row.label += suffix;
                    report.rows.push_back(row);
                }
                out << "ghz3 model value" << suffix << ": " << format_double(result.value) << "\n";
            }
        }
    } else {
        throw UsageError("model needs --state singlet|chsh|hardy|ghz3|ghz4");
    }
    apply_strict(report, c.strict_table && (c.state == "ghz3" || c.state == "ghz4"));
    return emit(report, c, "model-" + c.state, out);
}

// ---------------------------------------------------------------- solve-hardy

int command_solve_hardy(const RunConfig& c, std::ostream& out) {
    const auto thetas = angle_values(c, c.theta, c.theta_grid, "theta", true);
    const auto rows = lrmodel::scan_hardy(thetas, {}, b_minus(c));
    const auto& labels = lrmodel::hardy_residual_labels();

    std::string content;
    if (c.format == "csv") {
        content = "theta,alpha,beta,gamma,delta,eta,rho,nu,residual_norm,solved,consistency_gap,failing_equations\n";
        for (const auto& r : rows) {
            const auto& a = r.angles;
            std::string failing;
            for (std::size_t i : r.failing) failing += (failing.empty() ? "" : ";") + labels[i];
            content += format_double(from_radians(c, a.theta));
            for (double v : a.unknowns()) content += "," + format_double(from_radians(c, v));
            content += "," + format_double(a.residual_norm) + "," + (r.solved ? "true" : "false") + "," +
                       format_double(r.consistency_gap) + ",\"" + failing + "\"\n";
        }
    } else {
        nlohmann::ordered_json doc;
        doc["unit"] = c.unit;
        doc["tolerance"] = lrmodel::kHardyTolerance;
        doc["b_minus"] = c.b_minus;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            const auto& a = r.angles;
            nlohmann::ordered_json row;
            row["theta"] = from_radians(c, a.theta);
            const auto x = a.unknowns();
            const std::array<const char*, 7> names{"alpha", "beta", "gamma", "delta", "eta", "rho", "nu"};
            for (std::size_t i = 0; i < 7; ++i) row["angles"][names[i]] = from_radians(c, x[i]);
            row["residual_norm"] = a.residual_norm;
            row["solved"] = r.solved;
            row["consistency_gap"] = r.consistency_gap;
            const auto res = lrmodel::hardy_residuals(a);
            row["residuals"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < res.size(); ++i) row["residuals"].push_back({{"equation", labels[i]}, {"value", res[i]}});
            row["failing_equations"] = nlohmann::ordered_json::array();
            for (std::size_t i : r.failing) row["failing_equations"].push_back(labels[i]);
            row["headline"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < 4; ++i) {
                row["headline"].push_back({{"pair", qmref::label(qmref::hardy_pairs()[i])},
                                           {"model", r.headline_model[i]},
                                           {"oracle", r.headline_oracle[i]}});
            }
            doc["rows"].push_back(std::move(row));
        }
        content = doc.dump(2) + "\n";
    }
    const std::string path = resolve_output_path(c.output, "solve-hardy", c.format);
    write_atomic(path, content);

    std::size_t solved = 0;
    for (const auto& r : rows) {
        out << angle_label(c, "theta", r.angles.theta) << "  residual_norm " << format_double(r.angles.residual_norm)
            << (r.solved ? "  solved" : "  FLAGGED") << "  consistency_gap " << format_double(r.consistency_gap);
        if (!r.failing.empty()) out << "  worst: " << labels[r.failing.front()];
        out << "\n";
        solved += r.solved ? 1 : 0;
    }
    out << solved << " of " << rows.size() << " grid points solved below " << format_double(lrmodel::kHardyTolerance)
        << "\nwrote " << path << "\n";
    return kExitSuccess;
}

// ---------------------------------------------------------------- scan-chsh

int command_scan_chsh(const RunConfig& c, std::ostream& out) {
    const qmref::Plane plane = c.plane == "xy" ? qmref::Plane::xy : c.plane == "yz" ? qmref::Plane::yz : qmref::Plane::xz;
    const int k = c.grid_count;
    const auto singlet = qmref::make_state(qmref::Singlet{});
    std::vector<double> t(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * i / k;

    const std::string unit = c.unit.empty() ? "deg" : c.unit;
    auto shown = [&unit](double rad) { return unit == "deg" ? rad * 180.0 / std::numbers::pi : rad; };

    std::string csv = "a,a_prime,b,b_prime,chsh_model,chsh_qm,bound\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    double best = -1.0;
    std::array<double, 4> arg{};
    for (double ta : t) {
        for (double tap : t) {
            for (double tb : t) {
                for (double tbp : t) {
                    const auto a = qmref::in_plane(plane, ta);
                    const auto ap = qmref::in_plane(plane, tap);
                    const auto b = qmref::in_plane(plane, tb);
                    const auto bp = qmref::in_plane(plane, tbp);
                    const double m = lrmodel::chsh_model(a, ap, b, bp);
                    const double q = qmref::chsh_qm(singlet, a, ap, b, bp);
                    const double bound = lrmodel::chsh_model_bound(a, ap, b, bp);
                    if (std::abs(m) > best) {
                        best = std::abs(m);
                        arg = {ta, tap, tb, tbp};
                    }
                    if (c.format == "csv") {
                        csv += format_double(shown(ta)) + "," + format_double(shown(tap)) + "," +
                               format_double(shown(tb)) + "," + format_double(shown(tbp)) + "," + format_double(m) +
                               "," + format_double(q) + "," + format_double(bound) + "\n";
                    } else {
                        rows.push_back({{"a", shown(ta)},
                                        {"a_prime", shown(tap)},
                                        {"b", shown(tb)},
                                        {"b_prime", shown(tbp)},
                                        {"chsh_model", m},
                                        {"chsh_qm", q},
                                        {"bound", bound}});
                    }
                }
            }
        }
    }
    std::string content = csv;
    if (c.format != "csv") {
        nlohmann::ordered_json doc;
        doc["plane"] = c.plane;
        doc["unit"] = unit;
        doc["rows"] = std::move(rows);
        content = doc.dump(2) + "\n";
    }
    const std::string path = resolve_output_path(c.output, "scan-chsh", c.format);
    write_atomic(path, content);
    out << "max |chsh_model| " << format_double(best) << " at (" << format_double(shown(arg[0])) << ", "
        << format_double(shown(arg[1])) << ", " << format_double(shown(arg[2])) << ", " << format_double(shown(arg[3]))
        << ") " << unit << "\nwrote " << path << "\n";
    return kExitSuccess;
}

// ---------------------------------------------------------------- mc

int command_mc(const RunConfig& c, std::ostream& out) {
    const auto table = load_table(c);
    mcsim::EnsembleConfig cfg;
    cfg.trials = c.samples.value_or(1'000'000);
    cfg.seed = c.seed;
    cfg.workers = c.workers;
    cfg.distribution.weight_plus = c.weight_plus;
    cfg.table = &table;
    if (c.state == "singlet") {
        const auto d = require_directions(c, 2);
        cfg.experiment = mcsim::SingletExperiment{d[0], d[1]};
    } else if (c.state == "chsh") {
        const auto d = require_directions(c, 4);
        cfg.experiment = mcsim::ChshExperiment{d[0], d[1], d[2], d[3]};
    } else if (c.state == "ghz4") {
        const auto d = require_directions(c, 4);
        cfg.experiment = mcsim::Ghz4Experiment{{d[0], d[1], d[2], d[3]}};
    } else if (c.state == "ghz3") {
        const auto d = require_directions(c, 3);
        cfg.experiment = mcsim::Ghz3Experiment{{d[0], d[1], d[2]},
                                               to_radians(c, c.alpha.value_or(0.0)),
                                               to_radians(c, c.delta.value_or(0.0))};
    } else {
        throw UsageError("mc needs --state singlet|chsh|ghz3|ghz4");
    }
    const auto report = mcsim::run_ensemble(cfg);

    std::string content;
    if (c.format == "csv") {
        content = "field,value\n";
        auto line = [&content](const std::string& k, const std::string& v) { content += k + "," + v + "\n"; };
        line("experiment", report.experiment);
        line("trials", std::to_string(report.trials));
        line("seed", std::to_string(report.seed));
        line("weight_plus", format_double(report.weight_plus));
        line("table_id", report.table_id);
        line("plus_fraction", format_double(report.plus_fraction));
        line("scalar_mean", format_double(report.scalar_mean));
        line("scalar_sigma", format_double(report.scalar_sigma));
        for (std::size_t i = 0; i < report.oriented_mean.size(); ++i) {
            line("oriented_mean_" + std::to_string(i + 1), format_double(report.oriented_mean[i]));
            line("oriented_sigma_" + std::to_string(i + 1), format_double(report.oriented_sigma[i]));
        }
        line("sign_channel_mean", format_double(report.sign_channel_mean));
        line("sign_channel_sigma", format_double(report.sign_channel_sigma));
        line("sign_channel_deviation", format_double(report.sign_channel_deviation));
        line("sign_channel_rule", "\"" + report.sign_channel_rule + "\"");
    } else {
        content = report.to_json();
    }
    const std::string path = resolve_output_path(c.output, "mc-" + c.state, c.format);
    write_atomic(path, content);

    double worst_sigma = 0.0;
    for (std::size_t i = 0; i < report.oriented_mean.size(); ++i) {
        if (report.oriented_sigma[i] > 0) {
            worst_sigma = std::max(worst_sigma, std::abs(report.oriented_mean[i]) / report.oriented_sigma[i]);
        }
    }
    out << report.experiment << ": scalar_mean " << format_double(report.scalar_mean) << ", largest oriented |mean|/sigma "
        << format_double(worst_sigma) << ", sign_channel_mean " << format_double(report.sign_channel_mean)
        << " (deviation " << format_double(report.sign_channel_deviation) << ")\nwrote " << path << "\n";
    return kExitSuccess;
}

// ---------------------------------------------------------------- compare

void compare_singlet(ComparisonReport& report, const RunConfig& c, std::uint64_t samples) {
    detail::Sampler rng(c.seed);
    const auto state = qmref::make_state(qmref::Singlet{});
    ComparisonReport worst;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto a = rng.unit3();
        const auto b = rng.unit3();
        const auto ap = rng.unit3();
        const auto bp = rng.unit3();
        ComparisonReport one;
        one.add("correlation vs state-vector expectation", lrmodel::singlet_correlation(a, b),
                qmref::tensor_expectation(state, {{a, b}}), c.tolerances.algebraic);
        one.add("CHSH model vs state-vector CHSH", lrmodel::chsh_model(a, ap, b, bp),
                qmref::chsh_qm(state, a, ap, b, bp), c.tolerances.algebraic);
        keep_worst(worst, one, "singlet: ");
    }
    report.append(worst);
    report.add("singlet: maximized CHSH vs 2 sqrt 2", qmref::maximize_chsh(state).value, kTsirelson,
               kTsirelsonTolerance);
}

void compare_hardy(ComparisonReport& report, const RunConfig& c) {
    ComparisonReport worst;
    for (int i = 0; i <= 20; ++i) {
        const double theta = std::numbers::pi / 2 * i / 20.0;
        ComparisonReport one;
        for (const auto& pair : qmref::hardy_pairs()) {
            one.add("amplitude <" + qmref::label(pair) + "> vs closed form", qmref::hardy_amplitude(theta, pair),
                    qmref::hardy_closed_form(theta, pair), c.tolerances.algebraic);
        }
        keep_worst(worst, one, "hardy: ");
    }
    report.append(worst);
    std::optional<lrmodel::HardyAngles> previous;
    RunConfig deg = c;
    deg.unit = "deg";
    for (double d : {0.0, 30.0, 45.0, 60.0, 90.0}) {
        const double theta = d * std::numbers::pi / 180.0;
        previous = lrmodel::solve_hardy(theta, previous);
        ComparisonReport one;
        hardy_model_rows(one, deg, theta, *previous, "hardy: ");
        // Only the headline pairs are model predictions; the rest are listed by `model`.
        for (std::size_t i = 0; i < 5; ++i) report.rows.push_back(one.rows[i]);
    }
}

template <std::size_t N>
void compare_ghz(ComparisonReport& report, const RunConfig& c, std::uint64_t samples, const sphere7::CrossTable& table) {
    detail::Sampler rng(c.seed + N);
    ComparisonReport worst;
    const auto options = ghz_options(c, table);
    for (std::uint64_t s = 0; s < samples; ++s) {
        if constexpr (N == 4) {
            const auto result = lrmodel::ghz4_model({rng.unit3(), rng.unit3(), rng.unit3(), rng.unit3()}, options);
            keep_worst(worst, result.report, "ghz4: ");
        } else {
            const std::array<UnitVec3, 3> n{rng.unit3(), rng.unit3(), rng.unit3()};
            const double alpha = rng.uniform(0.0, std::numbers::pi);
            const double delta = rng.uniform(0.0, 2.0 * std::numbers::pi);
            keep_worst(worst, lrmodel::ghz3_model(n, alpha, delta, options).report, "ghz3: ");
        }
    }
    apply_strict(worst, c.strict_table);
    report.append(worst);
}

int command_compare(const RunConfig& c, std::ostream& out) {
    const std::string state = c.state.empty() ? "all" : c.state;
    if (state != "all" && state != "singlet" && state != "hardy" && state != "ghz3" && state != "ghz4") {
        throw UsageError("compare needs --state singlet|hardy|ghz3|ghz4|all");
    }
    const auto table = load_table(c);
    const std::uint64_t samples = c.samples.value_or(1000);
    ComparisonReport report;
    report.metadata = {"compare/" + state, table.id(), c.seed};
    if (state == "all" || state == "singlet") compare_singlet(report, c, samples);
    if (state == "all" || state == "hardy") compare_hardy(report, c);
    if (state == "all" || state == "ghz4") compare_ghz<4>(report, c, samples, table);
    if (state == "all" || state == "ghz3") compare_ghz<3>(report, c, samples, table);
    return emit(report, c, "compare-" + state, out);
}

int command_identities(const RunConfig& c, std::ostream& out) {
    const auto table = load_table(c);
    const auto report = identity_suite(c.seed, c.samples.value_or(10'000), table, c.tolerances.algebraic);
    return emit(report, c, "identities", out);
}

}  // namespace

int run_command(const RunConfig& c, std::ostream& out) {
    if (c.command == "identities") return command_identities(c, out);
    if (c.command == "qm") return command_qm(c, out);
    if (c.command == "model") return command_model(c, out);
    if (c.command == "solve-hardy") return command_solve_hardy(c, out);
    if (c.command == "scan-chsh") return command_scan_chsh(c, out);
    if (c.command == "mc") return command_mc(c, out);
    if (c.command == "compare") return command_compare(c, out);
    throw UsageError("unknown command: " + c.command);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return run_command(parse_arguments(argc, argv), out);
    } catch (const HelpRequested& e) {
        out << e.what();
        return kExitSuccess;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace spherelab::cli

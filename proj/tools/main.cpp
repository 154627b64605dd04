// triq: command-line front end.
//   invariants   tangles + canonical parameters + Grassl for one state
//   acin         canonical reduction with unitary witnesses
//   family       fixed-tangle lambda4 sweep (CSV + interval sidecar)
//   scatter      random-ensemble I5 / tau3 table
//   fuzz         I5 monotonicity fuzzing under random local channels
//   orbit        normalization-preserving diagonal SL orbit scan
//   conformance  recomputed paper-claim report
// Exit codes: 0 ok, 1 fuzz violation, 2 input error, 3 numeric failure,
// 4 empty result.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "triq/acin.hpp"
#include "triq/conformance.hpp"
#include "triq/family.hpp"
#include "triq/invariants.hpp"
#include "triq/io.hpp"
#include "triq/kernels.hpp"
#include "triq/sampling.hpp"
#include "triq/slocc.hpp"
#include "triq/statecore.hpp"

namespace {

using nlohmann::json;

struct InputOpts {
    std::string preset;
    std::string state_path;
    double alpha = 0.0;

    triq::PureState3 resolve() const {
        if (!preset.empty() && !state_path.empty())
            throw triq::BadParamError("give either --preset or --state, not both");
        if (!preset.empty())
            return triq::preset_state(triq::parse_preset(preset), alpha);
        if (!state_path.empty()) return triq::load_state_file(state_path);
        throw triq::BadParamError("an input state is required (--preset or --state)");
    }
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--preset", in.preset, "ghz | w | product000 | psi_alpha");
    cmd->add_option("--alpha", in.alpha, "phase in radians (psi_alpha)");
    cmd->add_option("--state", in.state_path, "state JSON file (8 [re,im] pairs)");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw triq::ParseError("cannot open output file '" + path + "'");
    return file;
}

json tangles_json(const triq::TangleVector& v) {
    return {{"c12", v.c12},     {"c13", v.c13},     {"c23", v.c23},
            {"tau3", v.tau3},   {"tau11", v.tau11}, {"tau12", v.tau12},
            {"tau13", v.tau13}, {"i5", v.i5},       {"i6", v.i6}};
}

json matrix_json(const Eigen::Matrix2cd& m) {
    json rows = json::array();
    for (int r = 0; r < 2; ++r)
        rows.push_back({{m(r, 0).real(), m(r, 0).imag()},
                        {m(r, 1).real(), m(r, 1).imag()}});
    return rows;
}

int cmd_invariants(const InputOpts& in, const std::string& format,
                   const std::string& out_path) {
    triq::PureState3 s = in.resolve();
    triq::TangleVector v = triq::tangle_vector(s);
    triq::AcinReduction red = triq::to_acin(s);
    triq::GrasslValue ig = triq::grassl(red.params);

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    if (format == "csv") {
        os << triq::tangle_csv_header(true) << "\n"
           << triq::tangle_csv_row(v, &ig) << "\n";
    } else {
        json j = {{"tangles", tangles_json(v)},
                  {"acin", json::parse(triq::acin_params_json(red.params))},
                  {"grassl", {{"re", ig.re}, {"im", ig.im}}},
                  {"reduction_residual", red.residual}};
        os << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_acin(const InputOpts& in, const std::string& out_path) {
    triq::PureState3 s = in.resolve();
    triq::AcinReduction red = triq::to_acin(s);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    json j = {{"params", json::parse(triq::acin_params_json(red.params))},
              {"u1", matrix_json(red.u1.m)},
              {"u2", matrix_json(red.u2.m)},
              {"u3", matrix_json(red.u3.m)},
              {"residual", red.residual}};
    os << j.dump(2) << "\n";
    return 0;
}

int cmd_family(const InputOpts& in, bool have_target, triq::TangleTarget target,
               int points, bool probe, const std::string& out_path) {
    if (!in.preset.empty() || !in.state_path.empty()) {
        target = triq::target_from_state(in.resolve());
    } else if (!have_target) {
        throw triq::BadParamError(
            "family needs --alpha/--preset/--state or explicit --tau3/--c12/--c13/--c23");
    }
    triq::FamilyTable table;
    if (probe) {
        triq::ValidityInterval iv = triq::validity_interval(target);
        table = triq::probe_scan(target, points, iv.lo, iv.hi);
    } else {
        table = triq::scan(target, points);
    }

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    triq::write_family_csv(os, table);
    std::string sidecar = triq::interval_json(table.interval);
    if (!out_path.empty()) {
        std::ofstream side(out_path + ".interval.json");
        side << sidecar << "\n";
    } else {
        std::cerr << sidecar << "\n";
    }
    return 0;
}

int cmd_scatter(const std::string& ensemble, std::size_t n, std::uint64_t seed,
                const std::string& out_path) {
    auto rows = triq::sample_scatter(triq::parse_ensemble(ensemble), n, seed);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << "index,tau3,i5,c12,c13,c23,class\n";
    for (const auto& r : rows)
        os << r.index << "," << triq::fmt(r.tau3) << "," << triq::fmt(r.i5) << ","
           << triq::fmt(r.c12) << "," << triq::fmt(r.c13) << "," << triq::fmt(r.c23)
           << "," << r.cls.name() << "\n";
    return 0;
}

triq::Ensemble fuzz_pool(std::uint64_t trial) {
    switch (trial % 4) {
        case 2: return triq::Ensemble::GhzClass;
        case 3: return triq::Ensemble::WClass;
        default: return triq::Ensemble::Haar;
    }
}

int cmd_fuzz(std::uint64_t trials, std::uint64_t seed, double tol,
             const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << "trial,seed,class,i5_before,i5_after_avg,margin\n";
    double min_margin = 1e300;
    for (std::uint64_t k = 0; k < trials; ++k) {
        std::uint64_t trial_seed = seed + k;
        triq::PureState3 s = triq::sample_state(fuzz_pool(k), trial_seed);
        triq::KrausChannel ch = triq::random_two_kraus_channel(
            trial_seed ^ 0xabCDef0123456789ull, 1 + static_cast<int>(k % 2));
        triq::MonotonicityTrial t = triq::monotonicity_trial(s, ch);
        min_margin = std::min(min_margin, t.margin);
        os << k << "," << trial_seed << "," << triq::classify(s).name() << ","
           << triq::fmt(t.i5_before) << "," << triq::fmt(t.i5_after_avg) << ","
           << triq::fmt(t.margin) << "\n";
    }
    std::cerr << "min margin: " << triq::fmt(min_margin) << "\n";
    return min_margin < -tol ? 1 : 0;
}

int cmd_orbit(const InputOpts& in, int points, double tmax,
              const std::string& out_path) {
    triq::PureState3 s = in.resolve();
    triq::AcinParams p = triq::to_acin(s).params;
    double bound = triq::diagonal_t_bound(p);
    if (tmax <= bound)
        throw triq::BadParamError("tmax must exceed the bound " + std::to_string(bound));

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << "t,s2,norm2,tau3,c12,c23,i5\n";
    for (int k = 0; k < points; ++k) {
        double t = bound + (tmax - bound) * static_cast<double>(k) / (points - 1);
        double s2 = triq::diagonal_s_of_t(p, t, triq::Branch::Plus);
        triq::PureState3 moved = triq::apply_diagonal_orbit(p, t, triq::Branch::Plus);
        os << triq::fmt(t) << "," << triq::fmt(s2) << "," << triq::fmt(moved.norm2())
           << "," << triq::fmt(triq::three_tangle(moved)) << ","
           << triq::fmt(triq::concurrence(moved, {1, 2})) << ","
           << triq::fmt(triq::concurrence(moved, {2, 3})) << ","
           << triq::fmt(triq::kempe_i5(moved)) << "\n";
    }
    return 0;
}

int cmd_conformance(std::uint64_t seed, const std::string& out_path) {
    auto claims = triq::conformance_claims(seed);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << triq::conformance_json(claims) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-qubit entanglement invariants and canonical forms"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand name

    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::string format = "json";
    std::string out_path;
    std::string kernels = "auto";
    app.add_option("--seed", seed, "RNG base seed")->capture_default_str();
    app.add_option("--tol", tol, "tolerance")->capture_default_str();
    app.add_option("--format", format, "csv | json")->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--kernels", kernels, "scalar | avx2 | auto");

    InputOpts in_inv, in_acin, in_family, in_orbit;

    auto* c_inv = app.add_subcommand("invariants", "tangle vector of one state");
    add_input_opts(c_inv, in_inv);

    auto* c_acin = app.add_subcommand("acin", "canonical reduction");
    add_input_opts(c_acin, in_acin);

    auto* c_family = app.add_subcommand("family", "fixed-tangle lambda4 sweep");
    add_input_opts(c_family, in_family);
    triq::TangleTarget target;
    int points = 200;
    auto* o_t3 = c_family->add_option("--tau3", target.tau3, "target threetangle");
    c_family->add_option("--c12", target.c12, "target C12");
    c_family->add_option("--c13", target.c13, "target C13");
    c_family->add_option("--c23", target.c23, "target C23");
    c_family->add_option("--points", points, "rows in the sweep")->capture_default_str();
    bool probe = false;
    c_family->add_flag("--probe", probe,
                       "clamped diagnostic sweep across the interval hull");

    auto* c_scatter = app.add_subcommand("scatter", "random-ensemble I5/tau3 table");
    std::string ensemble = "haar";
    std::size_t nsamples = 5000;
    c_scatter->add_option("--ensemble", ensemble, "haar | ghz | acin | w")
        ->capture_default_str();
    c_scatter->add_option("--n", nsamples, "sample count")->capture_default_str();

    auto* c_fuzz = app.add_subcommand("fuzz", "I5 monotonicity fuzzing");
    std::uint64_t trials = 10000;
    c_fuzz->add_option("--trials", trials, "trial count")->capture_default_str();

    auto* c_orbit = app.add_subcommand("orbit", "diagonal SL orbit scan");
    add_input_opts(c_orbit, in_orbit);
    int orbit_points = 100;
    double tmax = 1.5;
    c_orbit->add_option("--points", orbit_points, "scan points")->capture_default_str();
    c_orbit->add_option("--tmax", tmax, "upper |t|")->capture_default_str();

    auto* c_conf = app.add_subcommand("conformance", "paper-claim report");

    CLI11_PARSE(app, argc, argv);

    try {
        triq::kernels::force(kernels);
        if (c_inv->parsed()) return cmd_invariants(in_inv, format, out_path);
        if (c_acin->parsed()) return cmd_acin(in_acin, out_path);
        if (c_family->parsed())
            return cmd_family(in_family, o_t3->count() > 0, target, points, probe, out_path);
        if (c_scatter->parsed()) return cmd_scatter(ensemble, nsamples, seed, out_path);
        if (c_fuzz->parsed()) return cmd_fuzz(trials, seed, tol, out_path);
        if (c_orbit->parsed()) return cmd_orbit(in_orbit, orbit_points, tmax, out_path);
        if (c_conf->parsed()) return cmd_conformance(seed, out_path);
    } catch (const triq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.category()) {
            case triq::ErrorCategory::Input: return 2;
            case triq::ErrorCategory::Numeric: return 3;
            case triq::ErrorCategory::Empty: return 4;
        }
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

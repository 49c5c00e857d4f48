#include "schwarz/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "schwarz/counterexamples.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/oracle.hpp"
#include "schwarz/rigidity.hpp"
#include "schwarz/spec_io.hpp"

namespace schwarz {
namespace cli {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<double> parse_csv_numbers(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(io::eval_number_expr(item));
    if (out.empty()) throw parse_error(std::string(what) + ": expected comma-separated numbers");
    return out;
}

Interval parse_window(const std::string& text) {
    std::vector<double> v = parse_csv_numbers(text, "--window");
    if (v.size() != 2) throw parse_error("--window: expected \"a,b\"");
    if (!(v[0] < v[1])) throw parse_error("--window: need a < b");
    return Interval::open(v[0], v[1]);
}

std::pair<int, int> parse_depths(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw parse_error("--depths: expected \"k1..k2\"");
    int k1 = 0, k2 = 0;
    try {
        k1 = std::stoi(text.substr(0, dots));
        k2 = std::stoi(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw parse_error("--depths: expected \"k1..k2\"");
    }
    if (k1 < 1 || k2 < k1) throw parse_error("--depths: need 1 <= k1 <= k2");
    return {k1, k2};
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SCHWARZ_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 20240801ULL;
}

void print_breakdown(std::ostream& out, const PerimeterBreakdown& b) {
    out << "window " << b.window.str() << "\n";
    out << "ac " << fmt12(b.ac_part) << "\n";
    out << "jump " << fmt12(b.jump_part) << "\n";
    out << "cantor " << fmt12(b.cantor_part) << "\n";
    out << "total " << fmt12(b.total) << "\n";
}

void print_verdict(std::ostream& out, const RigidityVerdict& v) {
    if (v.rigid) {
        out << "RIGID";
        if (v.J) out << ", J=(" << fmt12(v.J->lo) << "," << fmt12(v.J->hi) << ")";
        out << "\n";
        return;
    }
    out << "NOT RIGID\n";
    for (const FailureWitness& w : v.failures) {
        if (const auto* d = std::get_if<Disconnected>(&w)) {
            out << "  disconnected at z=" << fmt12(d->zbar) << "\n";
        } else if (const auto* j = std::get_if<JumpFailure>(&w)) {
            out << "  jump at z=" << fmt12(j->zbar) << ": limits (" << fmt12(j->lower) << ","
                << fmt12(j->upper) << ")\n";
        } else if (const auto* c = std::get_if<CantorMassFailure>(&w)) {
            out << "  cantor mass " << fmt12(c->mass) << " on (" << fmt12(c->lo) << ","
                << fmt12(c->hi) << ")\n";
        }
    }
}

// First Cantor atom eligible for the refinement report.
CantorAtom report_atom(const Profile& profile) {
    std::vector<CantorAtom> atoms = profile.function().cantor_atoms();
    if (atoms.empty())
        throw precondition_error("report: profile has no Cantor part to discretize");
    return atoms.front();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schwarz symmetral perimeters, rigidity decisions and equality-case witnesses"};
    app.name("schwarz");
    app.require_subcommand(1);

    std::string spec_path, window_str, kind, tau_str, out_path, depths_str;
    double zbar = 0.0, lambda = 0.5;
    int resolution = 400;
    std::uint64_t seed = default_seed();

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "profile spec file")->required();
    };

    CLI::App* perimeter = app.add_subcommand("perimeter", "perimeter breakdown of the set");
    add_spec(perimeter);
    perimeter->add_option("--window", window_str, "open window a,b (default: whole line)");

    CLI::App* volume_cmd = app.add_subcommand("volume", "volume of the set");
    add_spec(volume_cmd);

    CLI::App* rigidity_cmd = app.add_subcommand("rigidity", "decide rigidity of the profile");
    add_spec(rigidity_cmd);

    CLI::App* witness = app.add_subcommand("witness", "construct an equality-case witness");
    add_spec(witness);
    witness->add_option("--kind", kind, "split | jump | cantor")->required();
    CLI::Option* zbar_opt = witness->add_option("--zbar", zbar, "witness location");
    witness->add_option("--tau", tau_str, "translation vector x,y (direction for cantor)");
    witness->add_option("--lambda", lambda, "Cantor drift factor in (0,1)");
    witness->add_option("--out", out_path, "write the witness spec file here");

    CLI::App* verify = app.add_subcommand("verify", "compare analytic perimeter with the oracle");
    add_spec(verify);
    verify->add_option("--resolution", resolution, "triangulation resolution (default 400)");
    verify->add_option("--seed", seed, "seed for density probes (env SCHWARZ_SEED)");

    CLI::App* report = app.add_subcommand("report", "CSV of staircase refinement perimeters");
    add_spec(report);
    report->add_option("--depths", depths_str, "depth range k1..k2")->required();
    report->add_option("--lambda", lambda, "Cantor drift factor in (0,1), default 0.5");

    std::vector<const char*> argv;
    argv.push_back("schwarz");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 64;
    }

    try {
        io::SpecDocument doc = io::parse_spec_file(spec_path);

        if (*perimeter) {
            Interval window = window_str.empty() ? Interval::all() : parse_window(window_str);
            PerimeterBreakdown b = doc.drift ? perimeter_tube(doc.to_tube(), window)
                                             : perimeter_symmetral(doc.profile, window);
            print_breakdown(out, b);
            return 0;
        }

        if (*volume_cmd) {
            out << "volume " << fmt12(volume(doc.profile)) << "\n";
            return 0;
        }

        if (*rigidity_cmd) {
            print_verdict(out, decide(doc.profile));
            return 0;
        }

        if (*witness) {
            WitnessSet w = [&]() -> WitnessSet {
                if (kind == "split" || kind == "jump") {
                    if (zbar_opt->count() == 0)
                        throw precondition_error("witness: --zbar is required");
                    if (tau_str.empty()) throw precondition_error("witness: --tau is required");
                    std::vector<double> tau = parse_csv_numbers(tau_str, "--tau");
                    return kind == "split" ? split_witness(doc.profile, zbar, std::move(tau))
                                           : jump_witness(doc.profile, zbar, std::move(tau));
                }
                if (kind == "cantor") {
                    std::vector<double> e;
                    if (!tau_str.empty()) e = parse_csv_numbers(tau_str, "--tau");
                    return cantor_witness(doc.profile, lambda, std::move(e));
                }
                throw precondition_error("witness: unknown kind '" + kind + "'");
            }();
            InequalityCheck chk = check_inequality(w.tube);
            std::string text = io::serialize_witness(w, chk);
            if (!out_path.empty()) {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw precondition_error("witness: cannot write '" + out_path + "'");
                file << text;
                out << "wrote " << out_path << "\n";
            } else {
                out << text;
            }
            std::ostream& summary = out_path.empty() ? err : out;
            summary << "p_tube " << fmt12(chk.tube_perimeter) << " p_symmetral "
                    << fmt12(chk.symmetral_perimeter) << " gap " << fmt12(chk.gap) << " holds "
                    << (chk.holds ? "yes" : "no") << "\n";
            return 0;
        }

        if (*verify) {
            TubeSet tube = doc.to_tube();
            bool truncated = false;
            for (const Piece& p : doc.profile.function().pieces())
                if (std::holds_alternative<CantorPiece>(p)) truncated = true;
            if (truncated) {
                Profile approx = discretize_profile(doc.profile, 10);
                tube = doc.drift
                           ? TubeSet(approx, *doc.drift, tube.direction())
                           : TubeSet::symmetral(approx);
                out << "note: Cantor pieces truncated at depth 10 for the oracle\n";
            }
            double analytic = perimeter_tube(tube).total;
            double measured = oracle::oracle_perimeter(tube, resolution);
            double rel = std::fabs(analytic - measured) / (1.0 + std::fabs(analytic));
            out << "analytic " << fmt12(analytic) << "\n";
            out << "oracle " << fmt12(measured) << "\n";
            out << "rel_diff " << fmt12(rel) << "\n";

            // Density spot checks at the center of the widest positivity
            // interval: one point inside, one outside.
            std::vector<Interval> pos = positivity_intervals(tube.profile());
            if (!pos.empty()) {
                const Interval* widest = &pos.front();
                for (const Interval& J : pos)
                    if (J.length() > widest->length()) widest = &J;
                double zc = 0.5 * (widest->lo + widest->hi);
                RadiusProfile R(tube.profile());
                double r = R(zc), g = tube.drift_at(zc);
                const std::vector<double>& e = tube.direction();
                std::vector<double> inside = {zc}, outside = {zc};
                for (size_t i = 0; i < e.size(); ++i) {
                    inside.push_back(g * e[i]);
                    outside.push_back((g + 2.0 * r + 1.0) * e[i]);
                }
                double probe = std::max(1e-3, 0.2 * std::min(r, widest->length() / 2));
                std::vector<double> radii = {probe, probe / 2, probe / 4};
                auto din = oracle::oracle_density(tube, inside, radii, 20000, seed);
                auto dout = oracle::oracle_density(tube, outside, radii, 20000, seed + 1);
                out << "density inside [" << fmt12(din.theta_lower) << ","
                    << fmt12(din.theta_upper) << "] outside [" << fmt12(dout.theta_lower) << ","
                    << fmt12(dout.theta_upper) << "] generator " << din.generator << " seed "
                    << seed << "\n";
            }
            return 0;
        }

        if (*report) {
            auto [k1, k2] = parse_depths(depths_str);
            CantorAtom atom = report_atom(doc.profile);
            Interval window = Interval::open(atom.lo, atom.hi);
            out << "depth,discretized_symmetral_perimeter,staircase_witness_perimeter\n";
            for (int k = k1; k <= k2; ++k) {
                Profile pk = discretize_profile(doc.profile, k);
                RadiusProfile Rk(pk);
                double r_base = Rk.from_measure(pk.eval(atom.lo));
                WitnessSet stair = staircase_witness(pk, lambda, {}, r_base);
                double p_f = perimeter_symmetral(pk, window).total;
                double p_e = perimeter_tube(stair.tube, window).total;
                out << k << "," << fmt12(p_f) << "," << fmt12(p_e) << "\n";
            }
            return 0;
        }
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 64;
}

} // namespace cli
} // namespace schwarz

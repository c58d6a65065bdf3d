#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torik/io.hpp"

namespace {

using namespace torik;
using nlohmann::json;

// Exit codes: 0 success, 1 a verifiable check failed (incompatible pexp,
// oracle mismatch, non-integral localization), 2 malformed or out-of-contract
// input.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<Coord>::min() && v <= std::numeric_limits<Coord>::max())
        return json(linalg::to_coord(v));
    return json(v.str());
}

const char* cone_class_name(ConeClass c) {
    switch (c) {
        case ConeClass::smooth: return "smooth";
        case ConeClass::simplicial: return "simplicial";
        default: return "non-simplicial";
    }
}

struct Options {
    std::string fan_path;
    std::string divisor_path;
    std::string bundle_path;
    std::string pexp_path;
    int cone = -1;
    int todd_order = -1;
    bool chow = false;
    bool classical = false;
    bool oracle = false;
    bool as_json = false;
};

std::shared_ptr<const Fan> load_fan(const Options& opt) {
    return std::make_shared<const Fan>(validate_fan(io::parse_fan(io::load_json_file(opt.fan_path))));
}

TCartierDivisor load_divisor(const Options& opt, const Fan& fan) {
    return io::parse_divisor(io::load_json_file(opt.divisor_path), fan);
}

int cmd_fan_check(const Options& opt) {
    const auto fan = load_fan(opt);
    bool complete = false;
    bool completeness_known = fan->all_max_cones_full_dim_simplicial();
    if (completeness_known) complete = fan->is_complete();

    std::vector<Wall> walls;
    if (complete) walls = fan->walls();

    if (opt.as_json) {
        json cones = json::array();
        for (std::size_t i = 0; i < fan->cone_count(); ++i)
            cones.push_back(json{{"rays", fan->cone(i).ray_indices},
                                 {"class", cone_class_name(fan->classify(i))},
                                 {"multiplicity", int_to_json(fan->cone(i).multiplicity)}});
        json jwalls = json::array();
        for (const Wall& w : walls)
            jwalls.push_back(json{{"cones", {w.cone_a, w.cone_b}},
                                  {"span_rays", w.span_rays},
                                  {"perp", w.perp}});
        json out{{"rank", fan->rank()},
                 {"rays", fan->rays().size()},
                 {"max_cones", fan->cone_count()},
                 {"cones", cones},
                 {"walls", jwalls}};
        if (completeness_known)
            out["complete"] = complete;
        else
            out["complete"] = nullptr;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    std::cout << "rank: " << fan->rank() << "\n";
    std::cout << "rays: " << fan->rays().size() << "\n";
    std::cout << "max cones: " << fan->cone_count() << "\n";
    if (completeness_known)
        std::cout << "complete: " << (complete ? "yes" : "no") << "\n";
    else
        std::cout << "complete: undetermined (non-simplicial maximal cones)\n";
    for (std::size_t i = 0; i < fan->cone_count(); ++i) {
        std::cout << "cone " << i << ": rays {";
        const auto& idx = fan->cone(i).ray_indices;
        for (std::size_t k = 0; k < idx.size(); ++k)
            std::cout << (k ? "," : "") << idx[k];
        std::cout << "} " << cone_class_name(fan->classify(i));
        if (fan->classify(i) == ConeClass::simplicial)
            std::cout << " multiplicity " << fan->cone(i).multiplicity.str();
        std::cout << "\n";
    }
    for (const Wall& w : walls)
        std::cout << "wall: cones " << w.cone_a << "|" << w.cone_b << " perp "
                  << format_charvec(w.perp) << "\n";
    return kOk;
}

int cmd_chi(const Options& opt) {
    const auto fan = load_fan(opt);
    if (opt.divisor_path.empty() == opt.bundle_path.empty())
        throw input_error("chi: exactly one of --divisor or --bundle is required");

    LaurentPolynomial chi(fan->rank());
    std::optional<BrionReport> oracle;
    if (!opt.divisor_path.empty()) {
        const TCartierDivisor d = load_divisor(opt, *fan);
        chi = chi_T_divisor(*fan, d);
        if (opt.oracle)
            oracle = brion_check(*fan, d);
        else if (positivity_check(*fan, d) == Positivity::neither)
            std::cerr << "note: divisor is not basepoint-free; "
                         "the localization value is not oracle-verified\n";
    } else {
        if (opt.oracle) throw input_error("chi: --oracle applies only to divisors");
        chi = chi_T_bundle(*fan, io::parse_bundle(io::load_json_file(opt.bundle_path), *fan));
    }

    if (opt.as_json) {
        json out;
        if (opt.classical)
            out["classical"] = int_to_json(chi.augment());
        else
            out["chi"] = io::laurent_to_json(chi);
        if (oracle)
            out["oracle"] = json{{"match", oracle->match},
                                 {"lattice_points", oracle->lattice_point_count},
                                 {"polytope_sum", io::laurent_to_json(oracle->polytope_sum)}};
        std::cout << out.dump(2) << "\n";
        return oracle && !oracle->match ? kCheckFailed : kOk;
    }

    if (opt.classical)
        std::cout << chi.augment().str() << "\n";
    else
        std::cout << chi.to_string() << "\n";
    if (oracle) {
        if (!oracle->match) {
            std::cout << "oracle: MISMATCH\n";
            std::cout << "polytope sum: " << oracle->polytope_sum.to_string() << "\n";
            return kCheckFailed;
        }
        std::cout << "oracle: match (" << oracle->lattice_point_count << " lattice points)\n";
    }
    return kOk;
}

int cmd_mult(const Options& opt) {
    const auto fan = load_fan(opt);
    if (opt.cone < 0 || static_cast<std::size_t>(opt.cone) >= fan->cone_count())
        throw input_error("mult: --cone index out of range");
    const std::size_t cone = static_cast<std::size_t>(opt.cone);
    const LocalizedElement e = em_k(*fan, cone);

    if (opt.as_json) {
        json out{{"em_k", io::localized_to_json(e)}};
        if (opt.chow) out["em_a"] = io::chow_to_json(em_a(*fan, cone));
        if (opt.todd_order >= 0)
            out["todd"] = io::series_to_json(
                todd_at_fixed_point(*fan, cone, static_cast<std::size_t>(opt.todd_order)));
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    std::cout << "em_k: " << e.to_string() << "\n";
    if (opt.chow) std::cout << "em_a: " << em_a(*fan, cone).to_string() << "\n";
    if (opt.todd_order >= 0) {
        const GradedSeries t =
            todd_at_fixed_point(*fan, cone, static_cast<std::size_t>(opt.todd_order));
        std::cout << "todd:\n" << t.to_string() << "\n";
    }
    return kOk;
}

int cmd_pexp_check(const Options& opt) {
    const auto fan = load_fan(opt);
    const auto values = io::parse_pexp(io::load_json_file(opt.pexp_path), *fan);
    const PExpReport report = check_pexp(*fan, values);

    if (opt.as_json) {
        json walls = json::array();
        for (const WallCheck& c : report.walls)
            walls.push_back(json{{"cones", {c.wall.cone_a, c.wall.cone_b}},
                                 {"perp", c.wall.perp},
                                 {"ok", c.ok},
                                 {"residue", io::laurent_to_json(c.residue)}});
        std::cout << json{{"valid", report.valid}, {"walls", walls}}.dump(2) << "\n";
        return report.valid ? kOk : kCheckFailed;
    }

    for (const WallCheck& c : report.walls) {
        std::cout << "wall: cones " << c.wall.cone_a << "|" << c.wall.cone_b << " perp "
                  << format_charvec(c.wall.perp) << ": ";
        if (c.ok)
            std::cout << "ok\n";
        else
            std::cout << "FAIL residue " << c.residue.to_string() << "\n";
    }
    std::cout << "pexp: " << (report.valid ? "valid" : "INVALID") << "\n";
    return report.valid ? kOk : kCheckFailed;
}

int cmd_pexp_push(const Options& opt) {
    const auto fan = load_fan(opt);
    const auto values = io::parse_pexp(io::load_json_file(opt.pexp_path), *fan);
    const auto f = PiecewiseExponential::checked(fan, values);
    const LaurentPolynomial chi = pushforward_to_point(f);
    if (opt.as_json)
        std::cout << json{{"chi", io::laurent_to_json(chi)}}.dump(2) << "\n";
    else
        std::cout << chi.to_string() << "\n";
    return kOk;
}

int cmd_points(const Options& opt) {
    const auto fan = load_fan(opt);
    if (opt.divisor_path.empty()) throw input_error("points: --divisor is required");
    const auto pts = polytope_points(*fan, load_divisor(opt, *fan));
    if (opt.as_json) {
        std::cout << json{{"points", io::points_to_json(pts)}}.dump(2) << "\n";
        return kOk;
    }
    for (const CharVec& p : pts) std::cout << format_charvec(p) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact torus-equivariant K-theory of complete toric fans"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--fan", opt.fan_path, "fan file (JSON)")->required();
    app.add_flag("--json", opt.as_json, "structured output");

    CLI::App* fan_cmd = app.add_subcommand("fan", "fan queries");
    fan_cmd->require_subcommand(1);
    CLI::App* fan_check = fan_cmd->add_subcommand("check", "validate and describe the fan");

    CLI::App* chi_cmd = app.add_subcommand("chi", "equivariant Euler characteristics");
    chi_cmd->add_option("--divisor", opt.divisor_path, "divisor file");
    chi_cmd->add_option("--bundle", opt.bundle_path, "fixed-point bundle data file");
    chi_cmd->add_flag("--classical", opt.classical, "print the integer Euler characteristic");
    chi_cmd->add_flag("--oracle", opt.oracle, "cross-check against the polytope lattice sum");

    CLI::App* mult_cmd = app.add_subcommand("mult", "equivariant multiplicities");
    mult_cmd->add_option("--cone", opt.cone, "maximal cone index")->required();
    mult_cmd->add_flag("--chow", opt.chow, "also print the Chow-side multiplicity");
    mult_cmd->add_option("--todd", opt.todd_order, "also print the Todd class to this order");

    CLI::App* pexp_cmd = app.add_subcommand("pexp", "piecewise exponential functions");
    pexp_cmd->require_subcommand(1);
    pexp_cmd->add_option("--pexp", opt.pexp_path, "piecewise exponential file")->required();
    CLI::App* pexp_check = pexp_cmd->add_subcommand("check", "wall compatibility report");
    CLI::App* pexp_push = pexp_cmd->add_subcommand("push", "pushforward to a point");

    CLI::App* points_cmd = app.add_subcommand("points", "divisor polytope lattice points");
    points_cmd->add_option("--divisor", opt.divisor_path, "divisor file")->required();

    try {
        app.parse(argc, argv);
        if (fan_check->parsed()) return cmd_fan_check(opt);
        if (chi_cmd->parsed()) return cmd_chi(opt);
        if (mult_cmd->parsed()) return cmd_mult(opt);
        if (pexp_cmd->parsed()) {
            if (pexp_check->parsed()) return cmd_pexp_check(opt);
            if (pexp_push->parsed()) return cmd_pexp_push(opt);
        }
        if (points_cmd->parsed()) return cmd_points(opt);
        std::cerr << app.help() << "\n";
        return kInputError;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const check_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const torik::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}

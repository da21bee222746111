// basinlab command-line front end: render, verify, orbit.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "basinlab/dynamics.hpp"
#include "basinlab/grid_io.hpp"
#include "basinlab/image.hpp"
#include "basinlab/methods.hpp"
#include "basinlab/report.hpp"

namespace bl = basinlab;

namespace {

constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "not a number: '" + item + "'");
        }
        if (used != item.size()) {
            throw CLI::ValidationError(what, "not a number: '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.size() != expected) {
        throw CLI::ValidationError(what, "expected " + std::to_string(expected) + " comma-separated numbers");
    }
    return out;
}

bl::MethodKind method_of(const std::string& name) {
    try {
        return bl::parse_method(name);
    } catch (const bl::DomainError& e) {
        throw CLI::ValidationError("--method", e.what());
    }
}

std::string g17(double x) { return bl::format_g(x, 17); }

struct RenderArgs {
    std::string method;
    int d = 0;
    std::string window = "0,0,3";
    int res = 1001;
    int max_iter = 500;
    std::string out = "basin.ppm";
    std::string dump;
    bool eight = false;
};

int run_render(const RenderArgs& a) {
    const bl::MethodMap m = bl::MethodMap::family(method_of(a.method), a.d);
    const std::vector<double> w = split_numbers(a.window, 3, "--window");
    bl::GridSpec spec;
    spec.center = bl::ComplexPoint(w[0], w[1]);
    spec.half_width = w[2];
    spec.resolution = a.res;
    spec.max_iter = a.max_iter;
    const bl::BasinGrid grid = bl::compute_grid(m, spec);
    if (a.out == "-") {
        bl::write_ppm(std::cout, grid);
    } else {
        bl::write_ppm(a.out, grid);
    }
    if (!a.dump.empty()) {
        bl::write_grid(a.dump, grid);
    }
    return 0;
}

struct VerifyArgs {
    std::string method;
    int d = 0;
    std::string d_range;
    std::vector<std::string> claims;
    int res = 1001;
    int max_iter = 500;
    int trials = 500;
    std::string out;
    bool eight = false;
};

int run_verify(const VerifyArgs& a) {
    bl::VerifyOptions o;
    o.method = method_of(a.method);
    if (!a.d_range.empty()) {
        const auto colon = a.d_range.find(':');
        if (colon == std::string::npos) {
            throw CLI::ValidationError("--d-range", "expected a:b");
        }
        try {
            o.d_from = std::stoi(a.d_range.substr(0, colon));
            o.d_to = std::stoi(a.d_range.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--d-range", "expected integers a:b");
        }
    } else {
        o.d_from = o.d_to = a.d;
    }
    if (o.d_from < 2 || o.d_to < o.d_from) {
        throw CLI::ValidationError("--d-range", "need 2 <= a <= b");
    }
    for (const std::string& c : a.claims) {
        const auto& known = bl::known_claims();
        if (std::find(known.begin(), known.end(), c) == known.end()) {
            throw CLI::ValidationError("--claims", "unknown claim group '" + c + "'");
        }
    }
    o.claims = a.claims;
    o.grid.resolution = a.res;
    o.grid.max_iter = a.max_iter;
    o.symmetry_trials = a.trials;
    o.connectivity = a.eight ? bl::Connectivity::Eight : bl::Connectivity::Four;

    const bl::VerifyOutcome result = bl::run_verify(o);
    const std::string text = result.report.dump(2) + "\n";
    if (a.out.empty() || a.out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) {
            throw bl::Error("cannot open " + a.out + " for writing");
        }
        f << text;
    }
    std::cerr << result.verdicts - result.failed << "/" << result.verdicts << " verdicts pass\n";
    return result.all_pass() ? 0 : kExitVerdictFailure;
}

struct OrbitArgs {
    std::string method;
    int d = 0;
    std::string seed;
    int n = 50;
};

std::string label_name(bl::Label l) {
    if (l == bl::kToInfinity) return "inf";
    if (l == bl::kUndecided) return "undecided";
    return "root" + std::to_string(static_cast<int>(l));
}

int run_orbit(const OrbitArgs& a) {
    const bl::MethodMap m = bl::MethodMap::family(method_of(a.method), a.d);
    const std::vector<double> s = split_numbers(a.seed, 2, "--seed");
    const bl::GridSpec spec;
    std::cout << "n,re,im,abs,label\n";
    bl::ComplexPoint z(s[0], s[1]);
    std::string label = "pending";
    for (int n = 0; n <= a.n; ++n) {
        if (z.is_infinite()) {
            std::cout << n << ",inf,inf,inf,inf\n";
            continue;
        }
        // label-so-far: the first root the orbit has come within conv_tol of
        if (label == "pending") {
            const auto& roots = m.roots();
            for (std::size_t k = 0; k < roots.size(); ++k) {
                if (std::abs(z.value() - roots[k]) < spec.conv_tol) {
                    label = label_name(static_cast<bl::Label>(k));
                }
            }
            if (z.modulus() > spec.escape_radius) {
                label = "inf";
            }
        }
        std::cout << n << ',' << g17(z.re()) << ',' << g17(z.im()) << ',' << g17(z.modulus()) << ',' << label
                  << '\n';
        z = m.eval(z).value;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Basins of attraction for Newton, Halley and Traub maps of z(z^d - 1)"};
    app.require_subcommand(1);

    RenderArgs ra;
    auto* render = app.add_subcommand("render", "Render a basin image as binary PPM");
    render->add_option("--method", ra.method, "newton | halley | traub")->required();
    render->add_option("--d", ra.d, "Degree parameter d >= 2")->required()->check(CLI::Range(2, 250));
    render->add_option("--window", ra.window, "cx,cy,half_width");
    render->add_option("--res", ra.res, "Pixels per side")->check(CLI::Range(1, 20000));
    render->add_option("--max-iter", ra.max_iter, "Iteration cap")->check(CLI::Range(1, 65535));
    render->add_option("--out", ra.out, "Output PPM path, - for stdout");
    render->add_option("--dump", ra.dump, "Also write the raw BasinGrid here");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the audits and emit a JSON report");
    verify->add_option("--method", va.method, "newton | halley | traub")->required();
    auto* dopt = verify->add_option("--d", va.d, "Single degree")->check(CLI::Range(2, 250));
    auto* ropt = verify->add_option("--d-range", va.d_range, "Degree range a:b");
    dopt->excludes(ropt);
    verify->add_option("--claims", va.claims, "Claim groups to run (default: all)")->delimiter(',');
    verify->add_option("--res", va.res, "Grid resolution for grid audits")->check(CLI::Range(3, 20000));
    verify->add_option("--max-iter", va.max_iter, "Iteration cap")->check(CLI::Range(1, 65535));
    verify->add_option("--trials", va.trials, "Symmetry audit seeds per degree")->check(CLI::Range(1, 1000000));
    verify->add_option("--out", va.out, "Report path (default stdout)");
    verify->add_flag("--eight-connected", va.eight, "Use 8-connectivity for components");

    OrbitArgs oa;
    auto* orbit = app.add_subcommand("orbit", "Print an orbit as CSV");
    orbit->add_option("--method", oa.method, "newton | halley | traub")->required();
    orbit->add_option("--d", oa.d, "Degree parameter d >= 2")->required()->check(CLI::Range(2, 250));
    orbit->add_option("--seed", oa.seed, "re,im")->required();
    orbit->add_option("--n", oa.n, "Iterations")->check(CLI::Range(0, 1000000));

    try {
        app.parse(argc, argv);
        if (verify->parsed() && dopt->count() == 0 && ropt->count() == 0) {
            throw CLI::RequiredError("--d or --d-range");
        }
        if (render->parsed()) {
            return run_render(ra);
        }
        if (verify->parsed()) {
            return run_verify(va);
        }
        return run_orbit(oa);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const bl::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerdictFailure;
    }
}

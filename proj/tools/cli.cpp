#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "littlewood/bounds.hpp"
#include "littlewood/dissociation.hpp"
#include "littlewood/energy.hpp"
#include "littlewood/errors.hpp"
#include "littlewood/generators.hpp"
#include "littlewood/mps.hpp"
#include "littlewood/optimizer.hpp"
#include "littlewood/set_io.hpp"
#include "littlewood/fft.hpp"
#include "littlewood/spectral.hpp"

namespace littlewood::cli {

namespace {

using setcore::IntegerSet;

// All floating output is printed with 12 significant digits.
void set_fmt(std::ostream& os) {
    os.precision(12);
    os.unsetf(std::ios::floatfield);
}

std::string fmt_double(double v) {
    std::ostringstream os;
    set_fmt(os);
    os << v;
    return os.str();
}

template <typename T>
std::string fmt_list(const std::vector<T>& xs) {
    std::ostringstream os;
    set_fmt(os);
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    os << ']';
    return os.str();
}

struct CommonOpts {
    std::string input;        // positional file path, or "-" for stdin
    std::string inline_set;   // --set "0,1,2"
    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 0;
    double tol = 1e-6;
};

IntegerSet load_set(const CommonOpts& o) {
    if (!o.inline_set.empty()) {
        std::vector<std::int64_t> values;
        std::stringstream ss(o.inline_set);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (token.find_first_not_of(" \t") == std::string::npos) continue;
            values.push_back(std::stoll(token));
        }
        if (values.empty()) throw std::domain_error("--set: no integers given");
        return IntegerSet::from_values(std::move(values));
    }
    if (o.input.empty()) throw std::domain_error("no input set: give a file path, '-', or --set");
    return setcore::read_set_path(o.input);
}

class OutputSink {
public:
    explicit OutputSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::domain_error("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
        set_fmt(*stream_);
    }
    std::ostream& os() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::string scheme_name(bounds::ChainScheme s) {
    return s == bounds::ChainScheme::lambda_geometric ? "lambda_geometric" : "eta_inverse";
}

std::string reason_name(bounds::StructureReason r) {
    switch (r) {
        case bounds::StructureReason::chain: return "chain";
        case bounds::StructureReason::trivial_delta_over_k: return "trivial_delta_over_k";
        case bounds::StructureReason::trivial_small_delta: return "trivial_small_delta";
    }
    return "?";
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_energy(const CommonOpts& o, std::ostream& out) {
    const auto A = load_set(o);
    const auto rep = setcore::additive_energy(A);
    OutputSink sink(o.out_path, out);
    if (o.format == "text") {
        sink.os() << "E=" << setcore::energy_to_string(rep.energy) << " omega=" << rep.omega
                  << " N=" << rep.size << '\n';
    } else {
        sink.os() << "{\"E\":" << setcore::energy_to_string(rep.energy)
                  << ",\"omega\":" << rep.omega << ",\"N\":" << rep.size << "}\n";
    }
    return kOk;
}

int cmd_l1norm(const CommonOpts& o, std::ostream& out) {
    const auto A = load_set(o);
    const auto f = spectral::SupportedFunction::indicator(A);
    const auto rep = spectral::l1_norm(f, o.tol);
    OutputSink sink(o.out_path, out);
    if (o.format == "csv") {
        const auto grid = spectral::sample_transform(f, rep.grid_used);
        spectral::write_spectrum_csv(sink.os(), grid);
    } else if (o.format == "text") {
        sink.os() << "l1=" << rep.l1 << " l2=" << rep.l2 << " l4=" << rep.l4
                  << " linf=" << rep.linf << " grid=" << rep.grid_used
                  << " certified_rel_error=" << rep.certified_rel_error << '\n';
    } else {
        sink.os() << "{\"l1\":" << rep.l1 << ",\"l2\":" << rep.l2 << ",\"l4\":" << rep.l4
                  << ",\"linf\":" << rep.linf << ",\"grid_used\":" << rep.grid_used
                  << ",\"certified_rel_error\":" << rep.certified_rel_error << "}\n";
    }
    return kOk;
}

std::string aggregate_certificate_json(const mps::IteratedTestFunction& itf) {
    mps::MPSCertificate agg;
    agg.b = itf.params.b;
    agg.c = itf.params.c();
    agg.M = itf.params.M;
    agg.M_t = itf.params.M_t;
    agg.tol = itf.params.tol;
    agg.max_prop3_violation = -1.0;
    bool factors_accepted = true;
    for (const auto& step : itf.per_step) {
        if (step.factor.R.empty()) continue;
        const auto& c = step.factor.diagnostics;
        agg.eps_support = std::max(agg.eps_support, c.eps_support);
        agg.max_prop3_violation = std::max(agg.max_prop3_violation, c.max_prop3_violation);
        agg.l2_ratio = std::max(agg.l2_ratio, c.l2_ratio);
        agg.min_real_h = std::min(agg.min_real_h, c.min_real_h);
        factors_accepted = factors_accepted && c.accepted;
    }
    agg.sup_R = itf.sup_R;
    agg.accepted = factors_accepted && itf.accepted;
    return agg.to_json();
}

int cmd_testfn(const CommonOpts& o, double b, double lambda, std::size_t grid, std::ostream& out) {
    const auto A = load_set(o);
    const auto chain = bounds::build_chain_lambda(A, lambda);
    mps::MPSParams params;
    params.b = b;
    params.tol = o.tol;
    params.M = grid;
    const auto res = mps::lower_bound_report(A, chain, params);
    OutputSink sink(o.out_path, out);
    sink.os() << "{\"bound\":" << res.bound << ",\"J\":" << chain.J()
              << ",\"sizes\":" << fmt_list(chain.sizes())
              << ",\"certificate\":" << aggregate_certificate_json(res.itf) << "}\n";
    return kOk;
}

int cmd_bound(const CommonOpts& o, const std::string& formula, double b, double lambda, double eta,
              double delta, double c_abs, std::ostream& out) {
    const auto A = load_set(o);
    bounds::BoundReport rep;
    std::optional<bounds::SegmentChain> chain;
    if (formula == "prop31") {
        chain = bounds::build_chain_lambda(A, lambda);
        rep = bounds::prop31_bound(*chain, b);
    } else {
        chain = bounds::build_chain_eta(A, delta, eta);
        rep = bounds::cor51_bound(*chain, c_abs);
    }
    OutputSink sink(o.out_path, out);
    sink.os() << "{\"scheme\":\"" << scheme_name(chain->scheme()) << "\",\"params\":{";
    if (formula == "prop31") {
        sink.os() << "\"lambda\":" << lambda << ",\"b\":" << b;
    } else {
        sink.os() << "\"eta\":" << eta << ",\"delta\":" << delta << ",\"c_abs\":" << c_abs;
    }
    sink.os() << "},\"sizes\":" << fmt_list(chain->sizes())
              << ",\"omegas\":" << fmt_list(chain->omegas()) << ",\"J\":" << rep.J
              << ",\"omega_sum\":" << rep.omega_sum << ",\"bound_value\":" << rep.bound_value
              << ",\"formula\":\"" << formula << '"';
    if (formula == "prop31") {
        sink.os() << ",\"j_lower_ratio\":" << chain->j_lower_ratio();
    } else {
        sink.os() << ",\"gg_constant\":" << rep.gg_constant;
    }
    sink.os() << "}\n";
    return kOk;
}

int cmd_structure(const CommonOpts& o, double K, double delta, double c_eta, std::ostream& out) {
    const auto A = load_set(o);
    const auto res = bounds::find_structured_subset(A, K, delta, c_eta);
    OutputSink sink(o.out_path, out);
    sink.os() << "{\"A_prime_size\":" << res.A_prime.size() << ",\"omega\":" << res.omega
              << ",\"segment_index\":" << res.segment_index << ",\"eta_used\":" << res.eta_used
              << ",\"delta\":" << res.delta << ",\"K\":" << res.K
              << ",\"all_omegas\":" << fmt_list(res.all_omegas) << ",\"reason\":\""
              << reason_name(res.reason) << "\",\"eta_clamped\":"
              << (res.eta_clamped ? "true" : "false") << "}\n";
    return kOk;
}

int cmd_optimize(const CommonOpts& o, std::ostream& out) {
    const auto rep = optimizer::maximize(optimizer::default_box());
    OutputSink sink(o.out_path, out);
    sink.os() << "{\"b_star\":" << rep.b_star << ",\"lambda_star\":" << rep.lambda_star
              << ",\"f_star\":" << rep.f_star << ",\"iterations\":" << rep.iterations
              << ",\"certificate\":{\"convergence_radius\":" << rep.convergence_radius
              << ",\"b_on_boundary\":" << (rep.b_on_boundary ? "true" : "false")
              << ",\"lambda_on_boundary\":" << (rep.lambda_on_boundary ? "true" : "false")
              << "}}\n";
    return kOk;
}

int cmd_surface(const CommonOpts& o, double b_lo, double b_hi, std::size_t b_steps,
                double l_lo, double l_hi, std::size_t l_steps, std::ostream& out) {
    if (b_steps < 2 || l_steps < 2) throw std::domain_error("surface: need >= 2 steps per axis");
    OutputSink sink(o.out_path, out);
    sink.os() << "b,lambda,f\n";
    for (std::size_t i = 0; i < b_steps; ++i) {
        const double b = b_lo + (b_hi - b_lo) * static_cast<double>(i) /
                                    static_cast<double>(b_steps - 1);
        for (std::size_t j = 0; j < l_steps; ++j) {
            const double l = l_lo + (l_hi - l_lo) * static_cast<double>(j) /
                                        static_cast<double>(l_steps - 1);
            sink.os() << b << ',' << l << ',' << optimizer::objective(b, l) << '\n';
        }
    }
    return kOk;
}

int cmd_dimension(const CommonOpts& o, std::ostream& out) {
    const auto A = load_set(o);
    const auto sub = setcore::greedy_dissociated_subset(A);
    const bool ok = setcore::is_dissociated(sub);
    OutputSink sink(o.out_path, out);
    if (o.format == "text") {
        for (const auto v : sub) sink.os() << v << '\n';
    } else {
        sink.os() << "{\"dim_lower_bound\":" << sub.size() << ",\"subset\":[";
        for (std::size_t i = 0; i < sub.size(); ++i) {
            if (i) sink.os() << ',';
            sink.os() << sub[i];
        }
        sink.os() << "],\"dissociated\":" << (ok ? "true" : "false") << "}\n";
    }
    return kOk;
}

int cmd_gen(const CommonOpts& o, const std::string& kind_name, const setcore::GenParams& gp,
            std::ostream& out) {
    const auto kind = setcore::parse_gen_kind(kind_name);
    if (!kind) throw std::domain_error("gen: unknown kind '" + kind_name + "'");
    const auto A = setcore::generate(*kind, gp, o.seed);
    OutputSink sink(o.out_path, out);
    if (o.format == "json") {
        sink.os() << '[';
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (i) sink.os() << ',';
            sink.os() << A[i];
        }
        sink.os() << "]\n";
    } else {
        setcore::write_set(sink.os(), A);
    }
    return kOk;
}

struct PropertyResult {
    std::string name;
    std::string status;  // pass / fail / skipped
    std::string detail;
};

int cmd_check(const CommonOpts& o, std::ostream& out);

// ---- invariant suite for `check` ------------------------------------------

std::vector<PropertyResult> run_invariant_suite(const IntegerSet& A, double tol,
                                                std::uint64_t seed) {
    namespace sc = setcore;
    namespace sp = spectral;
    std::vector<PropertyResult> results;
    auto push = [&](std::string name, bool pass, std::string detail) {
        results.push_back({std::move(name), pass ? "pass" : "fail", std::move(detail)});
    };
    auto skip = [&](std::string name, std::string why) {
        results.push_back({std::move(name), "skipped", std::move(why)});
    };

    const std::size_t n = A.size();
    const auto rep = sc::additive_energy(A);
    const auto n128 = static_cast<sc::Energy>(n);

    push("energy_bounds", rep.energy >= n128 * n128 && rep.energy <= n128 * n128 * n128,
         "N^2 <= E <= N^3 with E = " + sc::energy_to_string(rep.energy));

    if (n <= 12) {
        sc::Energy brute = 0;
        for (auto b1 : A)
            for (auto b2 : A)
                for (auto b3 : A)
                    for (auto b4 : A)
                        if (b1 + b2 == b3 + b4) ++brute;
        push("energy_enumeration", brute == rep.energy,
             "exhaustive 4-tuple count = " + sc::energy_to_string(brute));
    } else {
        skip("energy_enumeration", "N > 12");
    }

    {
        std::vector<std::int64_t> shifted;
        bool in_range = true;
        for (const auto v : A) {
            const std::int64_t w = 3 * v + 7;
            if (w > sc::kMaxElementMagnitude || w < -sc::kMaxElementMagnitude) in_range = false;
            shifted.push_back(w);
        }
        if (in_range) {
            const auto B = IntegerSet::from_values(std::move(shifted));
            push("energy_affine_invariance", sc::additive_energy(B).energy == rep.energy,
                 "E(7 + 3A) = E(A)");
        } else {
            skip("energy_affine_invariance", "3A + 7 exceeds the element cap");
        }
    }

    {
        sc::GenParams gp;
        gp.length = std::max<std::size_t>(4, std::min<std::size_t>(n, 64));
        gp.density = 0.5;
        const auto B = sc::generate(sc::GenKind::random_subset, gp, seed ^ 0x9e3779b97f4a7c15ull);
        push("cross_energy_symmetry", sc::cross_energy(A, B) == sc::cross_energy(B, A),
             "E(A,B) = E(B,A) for a random B");
    }

    {
        bool nested = true;
        for (std::size_t k = 1; k < n && nested; k *= 2) {
            const auto S1 = sc::initial_segment(A, k);
            const auto S2 = sc::initial_segment(A, std::min(n, 2 * k));
            for (const auto v : S1) {
                if (!S2.contains(v)) nested = false;
            }
        }
        push("initial_segment_nesting", nested, "segments nest along a doubling ladder");
    }

    try {
        const auto sub = sc::greedy_dissociated_subset(A);
        push("greedy_dissociated", sc::is_dissociated(sub),
             "greedy subset of size " + std::to_string(sub.size()) + " is dissociated");
    } catch (const capacity_error&) {
        skip("greedy_dissociated", "greedy subset exceeded the 2^30 sum cap");
    }

    const auto f = sp::SupportedFunction::indicator(A);
    {
        const std::size_t M = sp::next_pow2(2 * (static_cast<std::size_t>(A.spread()) + 1));
        if (M <= sp::kQuadratureGridCap) {
            const auto grid = sp::transform(f, M);
            const double lhs = grid.l2_sq();
            push("parseval", std::abs(lhs - static_cast<double>(n)) <= 1e-10 * static_cast<double>(n),
                 "grid ||f_hat||_2^2 = " + fmt_double(lhs) + " vs N = " + std::to_string(n));
        } else {
            skip("parseval", "spread too large for an alias-free grid");
        }
    }

    if (n <= 2048 && A.spread() <= (1 << 20)) {
        const auto conv = sp::convolve(f, f);
        const std::size_t M = sp::next_pow2(2 * (static_cast<std::size_t>(conv.spread()) + 1));
        const auto lhs = sp::transform(conv, M);
        const auto rhs = sp::transform(f, M);
        double worst = 0.0;
        for (std::size_t k = 0; k < M; ++k) {
            const auto want = rhs.values[k] * rhs.values[k];
            worst = std::max(worst, std::abs(lhs.values[k] - want));
        }
        push("convolution_theorem", worst <= 1e-10 * static_cast<double>(n) * static_cast<double>(n),
             "max grid deviation " + fmt_double(worst));
    } else {
        skip("convolution_theorem", "set too large for the exact convolution");
    }

    std::optional<sp::NormReport> norm;
    try {
        norm = sp::l1_norm(f, std::max(tol, 1e-8));
    } catch (const accuracy_error&) {
        skip("holder_chain", "l1 quadrature did not converge");
        skip("l1_upper_bound", "l1 quadrature did not converge");
    }
    if (norm) {
        const double n3 = std::pow(static_cast<double>(n), 3.0);
        const double e = static_cast<double>(rep.omega * n3);
        push("holder_chain", n3 <= e * norm->l1 * norm->l1 * (1.0 + 1e-5),
             "N^3 <= E ||f_hat||_1^2, l1 = " + fmt_double(norm->l1));
        push("l1_upper_bound", norm->l1 <= std::sqrt(static_cast<double>(n)) * (1.0 + tol),
             "l1 <= sqrt(N)");
    }

    if (A.spread() < (1 << 24)) {
        const auto [e_spec, e_exact] = sp::l4_energy_check(A);
        const double diff = std::abs(e_spec - static_cast<double>(e_exact));
        push("l4_energy_dual", diff <= 1e-6 * static_cast<double>(e_exact),
             "|E_spectral - E_exact| = " + fmt_double(diff));
    } else {
        skip("l4_energy_dual", "spread >= 2^24");
    }

    push("gabriel_domination", rep.energy <= bounds::gabriel_bound(n, n),
         "E(A) <= nm^2(1 - m/3n) + m/3 at n = m = N");

    if (n <= 200) {
        push("ordering_bound", bounds::ordering_bound_check(A, A), "rank bound on r(a_i + b_j)");
    } else {
        skip("ordering_bound", "N > 200");
    }

    return results;
}

int cmd_check(const CommonOpts& o, std::ostream& out) {
    const auto A = load_set(o);
    const auto results = run_invariant_suite(A, o.tol, o.seed);
    bool all_pass = true;
    for (const auto& r : results) {
        if (r.status == "fail") all_pass = false;
    }
    OutputSink sink(o.out_path, out);
    if (o.format == "text") {
        for (const auto& r : results) {
            sink.os() << r.status << "  " << r.name << "  (" << r.detail << ")\n";
        }
        sink.os() << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    } else {
        sink.os() << "{\"properties\":[";
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i) sink.os() << ',';
            sink.os() << "{\"name\":\"" << results[i].name << "\",\"status\":\""
                      << results[i].status << "\",\"detail\":\"" << results[i].detail << "\"}";
        }
        sink.os() << "],\"all_pass\":" << (all_pass ? "true" : "false") << "}\n";
    }
    return all_pass ? kOk : kAccuracy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"additive-energy statistics, damped test functions, and Littlewood-type "
                 "lower bounds for finite integer sets"};
    app.require_subcommand(1);

    CommonOpts common;
    double b = 1.3766505;
    double lambda = 36.1127893;
    double eta = 0.1;
    double delta = 0.5;
    double K = 10.0;
    double c_eta = 0.25;
    double c_abs = 1.0;
    std::size_t grid = 0;
    std::string formula = "prop31";
    std::string kind;
    setcore::GenParams gp;
    std::vector<std::string> ap_specs;
    double b_lo = 0.1, b_hi = 5.0, l_lo = 2.0, l_hi = 500.0;
    std::size_t b_steps = 50, l_steps = 50;

    auto add_set_input = [&](CLI::App* cmd) {
        cmd->add_option("input", common.input, "set file path, or '-' for stdin");
        cmd->add_option("--set", common.inline_set, "inline comma-separated elements");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", common.out_path, "write primary output to this file");
        cmd->add_option("--seed", common.seed, "64-bit seed for randomised pieces");
        cmd->add_option("--tol", common.tol, "tolerance (module-specific meaning)");
    };

    auto* energy = app.add_subcommand("energy", "additive energy E and omega of a set");
    add_set_input(energy);
    add_common(energy);

    auto* l1norm = app.add_subcommand("l1norm", "L1 norm of the set transform (plus L2/L4/Linf)");
    add_set_input(l1norm);
    add_common(l1norm);

    auto* testfn = app.add_subcommand("testfn",
                                      "certified lower bound via the damped test function");
    add_set_input(testfn);
    add_common(testfn);
    testfn->add_option("--b", b, "damping exponent");
    testfn->add_option("--lambda", lambda, "chain growth factor");
    testfn->add_option("--grid", grid, "grid size override (power of two)");

    auto* bound = app.add_subcommand("bound", "segment-chain lower bound reports");
    add_set_input(bound);
    add_common(bound);
    bound->add_option("--formula", formula, "prop31 or cor51")
        ->check(CLI::IsMember({"prop31", "cor51"}));
    bound->add_option("--b", b, "damping exponent (prop31)");
    bound->add_option("--lambda", lambda, "growth factor (prop31)");
    bound->add_option("--eta", eta, "thinning parameter (cor51)");
    bound->add_option("--delta", delta, "seed exponent (cor51)");
    bound->add_option("--c-abs", c_abs, "absolute constant in the cor51 bracket");

    auto* structure = app.add_subcommand("structure", "find a high-energy initial segment");
    add_set_input(structure);
    add_common(structure);
    structure->add_option("--K", K, "Littlewood-norm budget");
    structure->add_option("--delta", delta, "segment-size exponent");
    structure->add_option("--c-eta", c_eta, "constant in eta = c delta / K");

    auto* optimize = app.add_subcommand("optimize-constant",
                                        "maximise f(b, lambda) over the default box");
    add_common(optimize);

    auto* surface = app.add_subcommand("surface", "CSV grid of f(b, lambda)");
    add_common(surface);
    surface->add_option("--b-min", b_lo, "");
    surface->add_option("--b-max", b_hi, "");
    surface->add_option("--b-steps", b_steps, "");
    surface->add_option("--lambda-min", l_lo, "");
    surface->add_option("--lambda-max", l_hi, "");
    surface->add_option("--lambda-steps", l_steps, "");

    auto* dimension = app.add_subcommand("dimension", "greedy dissociated subset (dim lower bound)");
    add_set_input(dimension);
    add_common(dimension);

    auto* gen = app.add_subcommand("gen", "deterministic test-set generator");
    add_common(gen);
    gen->add_option("--kind", kind,
                    "interval | arithmetic_progression | lacunary | random_subset | union_of_aps")
        ->required();
    gen->add_option("--length", gp.length, "number of elements");
    gen->add_option("--start", gp.start, "first element (interval, AP)");
    gen->add_option("--step", gp.step, "AP step (nonzero)");
    gen->add_option("--ratio", gp.ratio, "lacunary growth ratio (>= 2)");
    gen->add_option("--density", gp.density, "random subset density in (0, 1]");
    gen->add_option("--ap", ap_specs, "union_of_aps component 'start:step:length' (repeatable)");

    auto* check = app.add_subcommand("check", "run the invariant suite on a set");
    add_set_input(check);
    add_common(check);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        for (const auto& spec : ap_specs) {
            setcore::ApSpec ap;
            if (std::sscanf(spec.c_str(), "%ld:%ld:%zu", &ap.start, &ap.step, &ap.length) != 3) {
                throw std::domain_error("gen: bad --ap spec '" + spec + "', want start:step:length");
            }
            gp.aps.push_back(ap);
        }

        // Set files default to the plain text format.
        if (gen->parsed() && gen->count("--format") == 0) common.format = "text";

        if (energy->parsed()) return cmd_energy(common, out);
        if (l1norm->parsed()) return cmd_l1norm(common, out);
        if (testfn->parsed()) return cmd_testfn(common, b, lambda, grid, out);
        if (bound->parsed()) return cmd_bound(common, formula, b, lambda, eta, delta, c_abs, out);
        if (structure->parsed()) return cmd_structure(common, K, delta, c_eta, out);
        if (optimize->parsed()) return cmd_optimize(common, out);
        if (surface->parsed())
            return cmd_surface(common, b_lo, b_hi, b_steps, l_lo, l_hi, l_steps, out);
        if (dimension->parsed()) return cmd_dimension(common, out);
        if (gen->parsed()) return cmd_gen(common, kind, gp, out);
        if (check->parsed()) return cmd_check(common, out);
        err << "no subcommand\n";
        return kUsage;
    } catch (const construction_error& e) {
        err << e.what() << '\n' << e.certificate_json() << '\n';
        return kAccuracy;
    } catch (const accuracy_error& e) {
        err << e.what() << '\n';
        return kAccuracy;
    } catch (const optimization_error& e) {
        err << e.what() << '\n';
        return kAccuracy;
    } catch (const capacity_error& e) {
        err << e.what() << '\n';
        return kCapacity;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return kDomain;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
}

}  // namespace littlewood::cli

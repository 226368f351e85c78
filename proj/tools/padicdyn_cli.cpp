// Batch front end: parse map descriptions, run the analyses and bound
// verifiers, emit deterministic tables or JSON.
//
// Exit codes: 0 ok/holds, 1 property violated, 2 parse/validation,
// 3 precondition, 4 resource cap.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padicdyn/padicdyn.hpp"
#include "padicdyn/mapspec.hpp"

using namespace padicdyn;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

std::string norm_str(long p, const ValQ& v) {
    if (!v.is_finite()) return "0";
    Rat e = -v.value();  // |x| = p^(-val)
    return std::to_string(p) + "^(" + rational_to_string(e) + ")";
}

json spectrum_json(const ValSpectrum& sp) {
    json out = json::array();
    for (const auto& e : sp.entries())
        out.push_back({{"valuation", e.first.str()}, {"multiplicity", e.second}});
    return out;
}

json pl_json(const PLFunction& f) {
    json out;
    out["sLo"] = rational_to_string(f.lo());
    out["sHi"] = rational_to_string(f.hi());
    out["valueAtLo"] = rational_to_string(f.value_at_lo());
    out["breakpoints"] = json::array();
    for (const auto& b : f.breakpoints()) out["breakpoints"].push_back(rational_to_string(b));
    out["slopes"] = json::array();
    for (const auto& s : f.slopes()) out["slopes"].push_back(rational_to_string(s));
    return out;
}

// Shared map input: a JSON spec file or inline flags.
struct MapInput {
    std::string spec_file;
    long p = 0;
    std::string num_csv, den_csv, z0_str;

    void attach(CLI::App* cmd, bool z0_flag = true) {
        cmd->add_option("--spec", spec_file, "JSON map spec file");
        cmd->add_option("--p", p, "prime of the valuation");
        cmd->add_option("--num", num_csv, "numerator coefficients, ascending, comma separated");
        cmd->add_option("--den", den_csv, "denominator coefficients, ascending, comma separated");
        if (z0_flag) cmd->add_option("--z0", z0_str, "base point");
    }

    static std::vector<std::string> split_csv(const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        return out;
    }

    MapSpec resolve() const {
        if (!spec_file.empty()) {
            std::ifstream in(spec_file);
            if (!in) throw CliError(kExitParse, "cannot open spec file: " + spec_file);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw CliError(kExitParse, std::string("bad JSON: ") + e.what());
            }
            MapSpec ms = MapSpec::from_json(j);
            if (!z0_str.empty()) ms.z0 = z0_str;
            return ms;
        }
        if (p == 0 || num_csv.empty() || den_csv.empty())
            throw CliError(kExitParse, "need --spec or all of --p/--num/--den");
        MapSpec ms;
        ms.p = p;
        ms.num = split_csv(num_csv);
        ms.den = split_csv(den_csv);
        if (!z0_str.empty()) ms.z0 = z0_str;
        return ms;
    }
};

void print_spectrum_table(std::ostream& os, const std::string& label, long p,
                          const ValSpectrum& sp) {
    os << label << ":\n";
    for (const auto& e : sp.entries())
        os << "  valuation " << e.first.str() << "  (norm " << norm_str(p, e.first)
           << ")  x" << e.second << "\n";
    if (sp.entries().empty()) os << "  (empty)\n";
}

int cmd_newton(const MapInput& input, bool as_json) {
    MapSpec ms = input.resolve();
    PadicContext ctx = ms.context();
    RatMap Q = ms.map();
    if (Q.degree() < 2) throw CliError(kExitParse, "map must have degree >= 2");
    Poly W = wronskian(Q);

    auto polygon_json = [&](const Poly& P) {
        NewtonPolygon np = build_newton_polygon(P, ctx);
        json v = json::array();
        for (const auto& [i, val] : np.vertices)
            v.push_back({{"index", i}, {"valuation", rational_to_string(val)}});
        return json{{"ordZero", np.ord_zero}, {"vertices", v}};
    };

    if (as_json) {
        json out;
        out["p"] = ctx.p();
        out["num"] = {{"polygon", polygon_json(Q.num())},
                      {"rootValuations", spectrum_json(root_valuations(Q.num(), ctx))}};
        if (!Q.den().is_constant())
            out["den"] = {{"polygon", polygon_json(Q.den())},
                          {"rootValuations", spectrum_json(root_valuations(Q.den(), ctx))}};
        if (!W.is_constant())
            out["wronskian"] = {{"polygon", polygon_json(W)},
                                {"rootValuations", spectrum_json(root_valuations(W, ctx))}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "p = " << ctx.p() << ", degree " << Q.degree() << "\n";
    print_spectrum_table(std::cout, "numerator roots", ctx.p(), root_valuations(Q.num(), ctx));
    if (!Q.den().is_constant())
        print_spectrum_table(std::cout, "denominator roots", ctx.p(),
                             root_valuations(Q.den(), ctx));
    if (!W.is_constant())
        print_spectrum_table(std::cout, "wronskian roots (finite critical points)", ctx.p(),
                             root_valuations(W, ctx));
    else
        std::cout << "wronskian is constant: no finite critical points\n";
    return kExitOk;
}

int cmd_verify(const MapInput& input, const std::string& theorem, bool as_json) {
    MapSpec ms = input.resolve();
    PadicContext ctx = ms.context();
    RatMap Q = ms.map();
    Rat z0 = ms.z0_value();

    Theorem t;
    if (theorem == "C") t = Theorem::C;
    else if (theorem == "D") t = Theorem::D;
    else if (theorem == "E") t = Theorem::E;
    else if (theorem == "F") t = Theorem::F;
    else throw CliError(kExitParse, "--theorem must be one of C, D, E, F");

    BoundCertificate cert = run_theorem(TheoremInstance{Q, z0}, ctx, t);
    if (as_json) {
        json out;
        out["theorem"] = theorem_name(cert.theorem);
        out["p"] = ctx.p();
        out["z0"] = rational_to_string(z0);
        out["lhsVal"] = cert.lhsVal.str();
        out["rhsVal"] = cert.rhsVal.str();
        out["holds"] = cert.holds;
        out["equality"] = cert.equality;
        out["spectrum"] = spectrum_json(cert.witnessSpectrum);
        out["excludedAtPoles"] = cert.excluded_at_poles;
        out["excludedAtInfinity"] = cert.excluded_at_infinity;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "bound " << theorem_name(cert.theorem) << " at z0 = "
                  << rational_to_string(z0) << ": " << (cert.holds ? "holds" : "VIOLATED")
                  << (cert.equality ? " with equality" : "") << "\n";
        std::cout << "  best distance |v - Q(z0)| = " << norm_str(ctx.p(), cert.lhsVal)
                  << "  (valuation " << cert.lhsVal.str() << ")\n";
        std::cout << "  bound                    = " << norm_str(ctx.p(), cert.rhsVal)
                  << "  (valuation " << cert.rhsVal.str() << ")\n";
        print_spectrum_table(std::cout, "distance spectrum", ctx.p(), cert.witnessSpectrum);
    }
    return cert.holds ? kExitOk : kExitViolated;
}

int cmd_cycles(const MapInput& input, long period, bool as_json) {
    MapSpec ms = input.resolve();
    PadicContext ctx = ms.context();
    RatMap Q = ms.map();
    if (period < 1) throw CliError(kExitParse, "--period must be >= 1");

    CycleReport rep = attracting_report(Q, period, ctx);
    json out;
    out["period"] = rep.period;
    out["pointCount"] = rep.point_count;
    out["groupingOk"] = rep.grouping_ok;
    json factor = json::array();
    for (long i = 0; i <= rep.exact_period_factor.degree(); ++i)
        factor.push_back(rational_to_string(rep.exact_period_factor[i]));
    out["exactPeriodFactor"] = factor;
    out["multipliers"] = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["valuation"] = e.multiplier_valuation.str();
        je[rep.grouping_ok ? "cycles" : "points"] = e.cycles;
        je["attracting"] = e.attracting;
        je["chiValuation"] = e.chi_valuation.str();
        je["thmA"] = e.flags.thmA;
        je["thmB"] = e.flags.thmB;
        je["corF"] = e.flags.corF_poly;
        je["cor43"] = e.flags.cor43;
        je["iterateThreshold"] = rational_to_string(e.flags.eq156Threshold);
        out["multipliers"].push_back(je);
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "period " << rep.period << ": " << rep.point_count
                  << " points of exact period\n";
        for (const auto& e : rep.entries) {
            std::cout << "  v(multiplier) = " << e.multiplier_valuation.str() << "  x"
                      << e.cycles << (rep.grouping_ok ? " cycles" : " points (ungrouped)")
                      << (e.attracting ? "  attracting" : "") << "  thmA="
                      << (e.flags.thmA ? "true" : "false") << " thmB="
                      << (e.flags.thmB ? "true" : "false") << " corF="
                      << (e.flags.corF_poly ? "true" : "false") << " cor43="
                      << (e.flags.cor43 ? "true" : "false") << "\n";
        }
    }
    return kExitOk;
}

int cmd_examples(const std::string& family, long p, long d, std::optional<long> q,
                 const std::string& eps_str, const std::string& alpha_str, bool as_json) {
    if (family == "p1")
        throw CliError(kExitPrecondition, "characteristic-p family out of scope");
    if (p == 0 || d == 0) throw CliError(kExitParse, "--p and --d are required");
    PadicContext ctx(p);

    FamilyInstance inst = [&] {
        try {
            if (family == "p0") return make_P0(ctx, d);
            if (family == "q0")
                return make_Q0(ctx, d, q,
                               eps_str.empty() ? std::optional<Rat>{} : parse_rational(eps_str));
            if (family == "q1") return make_Q1(ctx, d);
            if (family == "q2")
                return make_Q2(ctx, d, alpha_str.empty() ? std::optional<Rat>{}
                                                         : parse_rational(alpha_str));
            throw CliError(kExitParse, "--family must be one of p0, q0, q1, q2");
        } catch (const std::invalid_argument& e) {
            throw CliError(kExitPrecondition, e.what());
        }
    }();

    SharpnessReport rep = verify_sharpness(inst);
    if (as_json) {
        json out;
        out["family"] = family_name(rep.family);
        out["p"] = p;
        out["d"] = d;
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"informational", c.informational},
                              {"detail", c.detail}});
        out["checks"] = checks;
        out["allPass"] = rep.all_pass();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "family " << family_name(rep.family) << " (p=" << p << ", d=" << d << ")\n";
        for (const auto& c : rep.checks) {
            std::cout << "  " << (c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL")) << "  "
                      << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
    }
    return rep.all_pass() ? kExitOk : kExitViolated;
}

int cmd_profile(const MapInput& input, const std::string& d_param, const std::string& s_lo,
                const std::string& s_hi, bool as_json) {
    MapSpec ms = input.resolve();
    PadicContext ctx = ms.context();
    RatMap Q = ms.map();
    Rat d = parse_rational(d_param);
    Rat lo = parse_rational(s_lo), hi = parse_rational(s_hi);

    PLFunction g = G_profile(Q, ctx, d, lo, hi);  // throws precondition_error if uncertified
    std::optional<PLFunction> wf;
    try {
        wf = wf_profile(Q, ctx, lo, hi);
    } catch (const precondition_error&) {
        // chart for the derivative distortion not certified; report G only
    }

    json partials = json::array();
    for (const auto& b : g.breakpoints()) {
        PartialG pg = partial_G(Q, ctx, d, b, lo, hi);
        partials.push_back({{"s", rational_to_string(b)},
                            {"bySlope", rational_to_string(pg.by_slope)},
                            {"byCounting", rational_to_string(pg.by_counting)}});
    }

    if (as_json) {
        json out;
        out["p"] = ctx.p();
        out["d"] = rational_to_string(d);
        out["gProfile"] = pl_json(g);
        if (wf) out["wfProfile"] = pl_json(*wf);
        out["wfCertified"] = wf.has_value();
        out["partials"] = partials;
        std::cout << out.dump(2) << "\n";
    } else {
        auto show = [&](const char* name, const PLFunction& f) {
            std::cout << name << " on [" << rational_to_string(f.lo()) << ", "
                      << rational_to_string(f.hi()) << "], value at left "
                      << rational_to_string(f.value_at_lo()) << "\n  slopes:";
            for (size_t i = 0; i < f.slopes().size(); ++i) {
                if (i > 0) std::cout << " | " << rational_to_string(f.breakpoints()[i - 1]) << " |";
                std::cout << " " << rational_to_string(f.slopes()[i]);
            }
            std::cout << "\n";
        };
        show("G_d", g);
        if (wf) show("wf", *wf);
        else std::cout << "wf: chart not certified on this segment\n";
        for (const auto& e : partials)
            std::cout << "  dG at s=" << e["s"].get<std::string>() << ": slope "
                      << e["bySlope"].get<std::string>() << ", counting "
                      << e["byCounting"].get<std::string>() << "\n";
    }
    return kExitOk;
}

int cmd_fuzz(const std::string& theorem, long trials, std::uint64_t seed,
             const std::string& p_set, long max_deg) {
    if (trials <= 0) throw CliError(kExitParse, "--trials must be positive");
    std::vector<long> primes;
    for (const auto& tok : MapInput::split_csv(p_set)) primes.push_back(std::stol(tok));
    if (primes.empty()) throw CliError(kExitParse, "empty --p-set");
    for (long p : primes) PadicContext check(p);  // validate

    Lcg64 rng(seed);
    if (theorem == "lemma21") {
        long identities = 0;
        for (long trial = 0; trial < trials; ++trial) {
            PadicContext ctx(primes[static_cast<size_t>(trial) % primes.size()]);
            SegmentInstance inst = random_segment_instance(rng, ctx, 5);
            long d = inst.map.degree();
            for (Rat dpar : {Rat(1), Rat(d - 1), Rat(-d)}) {
                PLFunction g = G_profile(inst.map, ctx, dpar, inst.sLo, inst.sHi);
                std::vector<Rat> where(g.breakpoints());
                where.push_back((inst.sLo + inst.sHi) / 2);
                for (const auto& s : where) {
                    try {
                        PartialG pg = partial_G(inst.map, ctx, dpar, s, inst.sLo, inst.sHi);
                        (void)pg;
                        ++identities;
                    } catch (const std::logic_error& e) {
                        std::cout << "MISMATCH at s=" << rational_to_string(s) << ": " << e.what()
                                  << "\n"
                                  << MapSpec::from_map(ctx, inst.map).to_json().dump() << "\n";
                        return kExitViolated;
                    }
                }
            }
        }
        std::cout << trials << " instances, " << identities << " derivative identities hold\n";
        return kExitOk;
    }

    Theorem t;
    if (theorem == "C") t = Theorem::C;
    else if (theorem == "D") t = Theorem::D;
    else if (theorem == "E") t = Theorem::E;
    else if (theorem == "F") t = Theorem::F;
    else throw CliError(kExitParse, "--theorem must be C, D, E, F or lemma21");

    long held = 0;
    for (long trial = 0; trial < trials; ++trial) {
        PadicContext ctx(primes[static_cast<size_t>(trial) % primes.size()]);
        TheoremInstance inst = random_theorem_instance(rng, ctx, t, max_deg);
        BoundCertificate cert = run_theorem(inst, ctx, t);
        if (!cert.holds) {
            std::cout << "VIOLATION of bound " << theorem << " (trial " << trial << "):\n"
                      << MapSpec::from_map(ctx, inst.map, inst.z0).to_json().dump() << "\n";
            return kExitViolated;
        }
        ++held;
    }
    std::cout << held << "/" << trials << " hold\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic critical-value and cycle analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of tables");

    MapInput newton_in, verify_in, cycles_in, profile_in;

    auto* newton = app.add_subcommand("newton", "Newton polygons and root valuations");
    newton_in.attach(newton, false);

    auto* verify = app.add_subcommand("verify", "check one critical-value bound");
    verify_in.attach(verify);
    std::string theorem;
    verify->add_option("--theorem", theorem, "C, D, E or F")->required();

    auto* cycles = app.add_subcommand("cycles", "multiplier spectrum of exact-period cycles");
    cycles_in.attach(cycles, false);
    long period = 1;
    cycles->add_option("--period", period, "cycle period")->required();

    auto* examples = app.add_subcommand("examples", "build a sharpness family and verify it");
    std::string family, eps_str, alpha_str;
    long fam_p = 0, fam_d = 0;
    long fam_q = 0;
    bool fam_q_set = false;
    examples->add_option("--family", family, "p0, q0, q1 or q2")->required();
    examples->add_option("--p", fam_p, "prime");
    examples->add_option("--d", fam_d, "degree");
    examples->add_option("--q", fam_q, "pole order for q0")->each([&](const std::string&) {
        fam_q_set = true;
    });
    examples->add_option("--eps", eps_str, "eps parameter for q0");
    examples->add_option("--alpha", alpha_str, "alpha parameter for q2");

    auto* profile = app.add_subcommand("profile", "distorted log-size and wf profiles");
    profile_in.attach(profile, false);
    std::string d_param, s_lo, s_hi;
    profile->add_option("--d-param", d_param, "distortion weight d")->required();
    profile->add_option("--s-lo", s_lo, "left end of the log-radius segment")->required();
    profile->add_option("--s-hi", s_hi, "right end of the log-radius segment")->required();

    auto* fuzz = app.add_subcommand("fuzz", "seeded property runs for the bounds");
    std::string fuzz_theorem = "C", p_set = "2,3,5";
    long trials = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long max_deg = 4;
    fuzz->add_option("--theorem", fuzz_theorem, "C, D, E, F or lemma21");
    fuzz->add_option("--trials", trials, "number of instances")->required();
    fuzz->add_option("--seed", seed, "PRNG seed")->required()->each([&](const std::string&) {
        seed_set = true;
    });
    fuzz->add_option("--p-set", p_set, "comma separated primes");
    fuzz->add_option("--max-deg", max_deg, "maximal map degree");

    CLI11_PARSE(app, argc, argv);

    try {
        if (newton->parsed()) return cmd_newton(newton_in, as_json);
        if (verify->parsed()) return cmd_verify(verify_in, theorem, as_json);
        if (cycles->parsed()) return cmd_cycles(cycles_in, period, as_json);
        if (examples->parsed())
            return cmd_examples(family, fam_p, fam_d,
                                fam_q_set ? std::optional<long>(fam_q) : std::nullopt, eps_str,
                                alpha_str, as_json);
        if (profile->parsed()) return cmd_profile(profile_in, d_param, s_lo, s_hi, as_json);
        if (fuzz->parsed()) {
            (void)seed_set;
            return cmd_fuzz(fuzz_theorem, trials, seed, p_set, max_deg);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitViolated;
    }
    return kExitParse;
}

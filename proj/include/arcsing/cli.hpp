#pragma once

#include "arcsing/invariants.hpp"
#include "arcsing/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace arcsing::cli {

using nlohmann::json;

struct GlobalOptions {
    bool json_output = false;
    std::optional<long long> precision;
    std::optional<unsigned> seed;
};

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

inline InvariantOptions options_for(const Scenario& sc, const GlobalOptions& g) {
    InvariantOptions opt;
    opt.precision = sc.precision;
    if (opt.precision == kDefaultPrecision) {
        if (const char* env = std::getenv("ARC_CONTACT_PREC"))
            opt.precision = std::atoll(env);
    }
    if (g.precision) opt.precision = *g.precision;
    opt.exponent_cap = sc.exponent_cap;
    opt.max_steps = sc.max_steps;
    return opt;
}

inline std::string generator_str(const Scenario& sc, const WeightedGenerator& g) {
    std::string s = "(" + g.poly.str(sc.variables) + ")W";
    if (g.weight != 1) s += "^" + std::to_string(g.weight);
    return s;
}

inline json report_json(const ContactReport& r) {
    json rec;
    rec["ord"] = to_string(Rational(r.ord_phi));
    rec["r"] = to_string(r.r);
    rec["r_bar"] = to_string(r.r_bar);
    rec["rho"] = r.rho;
    rec["rho_bar"] = to_string(r.rho_bar);
    rec["rho_route"] = r.rho_from_blowups ? "blowup" : "algebraic";
    return rec;
}

inline std::string arc_str(const Scenario& sc, const Arc& a) {
    std::string s;
    for (std::size_t i = 0; i < a.images.size(); ++i) {
        if (i) s += ", ";
        s += sc.variables[i] + " -> " + a.images[i].str();
    }
    return s;
}

struct CommandContext {
    const Scenario& sc;
    const InvariantOptions& opt;
    json& results;
    std::ostream& out;
    bool json_output;
};

inline void cmd_closure(CommandContext& ctx, const std::string& poly_name) {
    for (const auto& np : ctx.sc.polynomials) {
        if (!poly_name.empty() && np.name != poly_name) continue;
        WeightedAlgebra g;
        g.variables = ctx.sc.variables;
        g.generators.push_back({np.poly, ctx.sc.weight_of(np)});
        WeightedAlgebra closed = diff_closure(g);
        json rec;
        rec["poly"] = np.name;
        rec["weight"] = ctx.sc.weight_of(np);
        rec["ord"] = to_string(algebra_order_at_origin(closed).value());
        rec["tau_lower_bound"] = tau_lower_bound(closed);
        json gens = json::array();
        for (const auto& gen : closed.generators) gens.push_back(generator_str(ctx.sc, gen));
        rec["generators"] = gens;
        ctx.results.push_back(rec);
        if (!ctx.json_output) {
            ctx.out << "closure of " << np.name << " (weight " << ctx.sc.weight_of(np) << "):\n";
            for (const auto& gen : closed.generators)
                ctx.out << "  " << generator_str(ctx.sc, gen) << "\n";
            ctx.out << "  ord at origin = " << to_string(algebra_order_at_origin(closed).value())
                    << ", tau lower bound = " << tau_lower_bound(closed) << "\n";
        }
    }
    if (!poly_name.empty() && ctx.results.empty())
        throw std::runtime_error("unknown polynomial: " + poly_name);
}

inline void cmd_contact(CommandContext& ctx, const std::string& arc_name) {
    const NamedArc* na = ctx.sc.find_arc(arc_name);
    if (!na) throw std::runtime_error("unknown arc: " + arc_name);
    ContactReport rep = contact_report(ctx.sc.variety(), na->arc, ctx.opt);
    json rec = report_json(rep);
    rec["arc"] = arc_name;
    ctx.results.push_back(rec);
    if (!ctx.json_output) {
        ctx.out << "arc " << arc_name << ": ord = " << rep.ord_phi << ", r = " << to_string(rep.r)
                << ", r_bar = " << to_string(rep.r_bar) << ", rho = " << rep.rho
                << ", rho_bar = " << to_string(rep.rho_bar) << " ("
                << (rep.rho_from_blowups ? "blowup" : "algebraic") << ")\n";
    }
}

inline void cmd_nash(CommandContext& ctx, const std::string& arc_name, bool full) {
    if (ctx.sc.polynomials.size() != 1)
        throw std::runtime_error("nash requires a hypersurface scenario (exactly one poly)");
    const NamedArc* na = ctx.sc.find_arc(arc_name);
    if (!na) throw std::runtime_error("unknown arc: " + arc_name);
    const Variety v = ctx.sc.variety();
    validate_on_variety(na->arc, v);
    NashTrace t = nash_sequence(v.polynomials.front(), na->arc, ctx.opt.max_steps, !full,
                                ctx.opt.precision);
    json rec;
    rec["arc"] = arc_name;
    rec["m"] = t.m;
    switch (t.terminated) {
        case NashTrace::Termination::FirstDrop: rec["terminated"] = "first_drop"; break;
        case NashTrace::Termination::Smooth: rec["terminated"] = "smooth"; break;
        default: rec["terminated"] = "max_steps"; break;
    }
    if (t.terminated == NashTrace::Termination::FirstDrop)
        rec["rho"] = static_cast<long long>(t.m.size()) - 1;
    ctx.results.push_back(rec);
    if (!ctx.json_output) {
        ctx.out << "nash multiplicity sequence for arc " << arc_name << ":\n";
        for (std::size_t i = 0; i < t.m.size(); ++i)
            ctx.out << "  m_" << i << " = " << t.m[i] << "\n";
        if (t.terminated == NashTrace::Termination::FirstDrop)
            ctx.out << "  rho = " << t.m.size() - 1 << "\n";
        else
            ctx.out << "  terminated: " << rec["terminated"].get<std::string>() << "\n";
    }
}

inline void cmd_isolated(CommandContext& ctx) {
    IsolatedVerdict v = isolated_verdict(ctx.sc.variety(), ctx.opt);
    json rec;
    switch (v.kind) {
        case IsolatedVerdict::Kind::Isolated: {
            rec["verdict"] = "ISOLATED";
            rec["Q"] = v.q;
            json exps;
            for (std::size_t i = 0; i < v.pure_power_exponents.size(); ++i)
                exps[ctx.sc.variables[i]] = v.pure_power_exponents[i];
            rec["pure_power_exponents"] = exps;
            break;
        }
        case IsolatedVerdict::Kind::NotIsolated: {
            rec["verdict"] = "NOT_ISOLATED";
            rec["axis"] = ctx.sc.variables[*v.axis];
            json fam = json::array();
            for (const auto& fe : v.family) {
                json e;
                e["N"] = fe.n;
                e["r_bar"] = to_string(fe.report.r_bar);
                e["arc"] = arc_str(ctx.sc, fe.arc);
                fam.push_back(e);
            }
            rec["family"] = fam;
            break;
        }
        default:
            rec["verdict"] = "UNKNOWN";
            rec["reason"] = v.reason;
            break;
    }
    ctx.results.push_back(rec);
    if (!ctx.json_output) {
        ctx.out << "verdict " << rec["verdict"].get<std::string>();
        if (v.kind == IsolatedVerdict::Kind::Isolated) ctx.out << ", Q=" << v.q;
        if (v.kind == IsolatedVerdict::Kind::NotIsolated) {
            ctx.out << " (axis " << ctx.sc.variables[*v.axis] << ")";
            for (const auto& fe : v.family)
                ctx.out << "\n  N=" << fe.n << "  r_bar=" << to_string(fe.report.r_bar);
        }
        if (v.kind == IsolatedVerdict::Kind::Unknown) ctx.out << ": " << v.reason;
        ctx.out << "\n";
    }
}

inline void cmd_family(CommandContext& ctx, const std::string& family_name,
                       const std::string& auto_axis) {
    std::vector<FamilyEntry> entries;
    if (!family_name.empty()) {
        const NamedFamily* nf = ctx.sc.find_family(family_name);
        if (!nf) throw std::runtime_error("unknown family: " + family_name);
        entries = family_sweep(ctx.sc.variety(), nf->family, ctx.opt);
    } else {
        int axis = ctx.sc.var_index(auto_axis);
        if (axis < 0) throw std::runtime_error("unknown variable: " + auto_axis);
        entries = family_search(ctx.sc.variety(), static_cast<std::size_t>(axis), 1, 10, ctx.opt);
    }
    for (const auto& fe : entries) {
        json rec = report_json(fe.report);
        rec["N"] = fe.n;
        rec["arc"] = arc_str(ctx.sc, fe.arc);
        ctx.results.push_back(rec);
        if (!ctx.json_output)
            ctx.out << "N=" << fe.n << "  r_bar=" << to_string(fe.report.r_bar) << "  rho="
                    << fe.report.rho << "  arc: " << arc_str(ctx.sc, fe.arc) << "\n";
    }
}

inline void cmd_sample(CommandContext& ctx, int cap) {
    InvariantOptions opt = ctx.opt;
    if (cap > 0) opt.exponent_cap = cap;
    PhiSample s = phi_sample(ctx.sc.variety(), opt);
    json rec;
    rec["cap"] = opt.exponent_cap;
    rec["count"] = s.entries.size();
    if (s.max_observed) rec["max_observed"] = to_string(*s.max_observed);
    if (s.min_observed) rec["min_observed"] = to_string(*s.min_observed);
    json entries = json::array();
    for (const auto& e : s.entries) {
        json rec2;
        rec2["exponents"] = e.exponents;
        rec2["r_bar"] = to_string(e.r_bar);
        entries.push_back(rec2);
    }
    rec["entries"] = entries;
    ctx.results.push_back(rec);
    if (!ctx.json_output) {
        ctx.out << "sampled " << s.entries.size() << " monomial arcs at cap " << opt.exponent_cap
                << "\n";
        if (s.max_observed)
            ctx.out << "max observed r_bar = " << to_string(*s.max_observed)
                    << ", min observed r_bar = " << to_string(*s.min_observed) << "\n";
    }
}

inline void cmd_verify(CommandContext& ctx) {
    const Variety v = ctx.sc.variety();
    auto check = [&](const std::string& name, bool ok) {
        json rec;
        rec["check"] = name;
        rec["status"] = ok ? "ok" : "FAIL";
        ctx.results.push_back(rec);
        if (!ctx.json_output) ctx.out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) throw std::runtime_error("verification failed: " + name);
    };
    for (const auto& na : ctx.sc.arcs) {
        ContactReport rep = contact_report(v, na.arc, ctx.opt);
        check("arc " + na.name + ": rho = floor(r)", Rational(rep.rho) == Rational(floor(rep.r)));
        check("arc " + na.name + ": r_bar >= 1", rep.r_bar >= 1);
    }
    for (const auto& nf : ctx.sc.families) {
        for (long long N = nf.family.n_lo; N <= nf.family.n_hi; ++N) {
            Arc arc = instantiate_family(nf.family, N);
            ContactReport rep = contact_report(v, arc, ctx.opt);
            check("family " + nf.name + " N=" + std::to_string(N) + ": rho = floor(r)",
                  Rational(rep.rho) == Rational(floor(rep.r)));
        }
    }
    if (v.polynomials.size() == 1) {
        Monomial m1, m2;
        if (is_balanced_binomial(v.polynomials.front(), m1, m2)) {
            InvariantOptions small = ctx.opt;
            small.exponent_cap = std::min(small.exponent_cap, 6);
            PhiSample s = phi_sample(v, small);
            bool floor_ok = true;
            for (const auto& e : s.entries)
                if (e.r_bar < 1) floor_ok = false;
            check("sampled arcs: r_bar >= 1", floor_ok);
            bool rho_ok = true;
            for (const auto& e : s.entries) {
                std::vector<FormalSeries> ims;
                for (long long ee : e.exponents) ims.push_back(FormalSeries::t(ee));
                ContactReport rep = contact_report(v, Arc(std::move(ims)), ctx.opt);
                if (Rational(rep.rho) != Rational(floor(rep.r))) rho_ok = false;
            }
            check("sampled arcs: blowup rho = floor(r)", rho_ok);
        }
    }
}

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact arc-based invariants of singularities"};
    app.require_subcommand(1);
    GlobalOptions g;
    long long prec_flag = -1;
    unsigned seed_flag = 0;
    app.add_flag("--json", g.json_output, "machine-readable JSON output");
    auto* prec_opt = app.add_option("--prec", prec_flag, "working precision for truncated series");
    auto* seed_opt = app.add_option("--seed", seed_flag, "seed for sampling order");

    std::string file, poly_name, arc_name, family_name, auto_axis;
    bool nash_full = false;
    int sample_cap = 0;

    auto* closure = app.add_subcommand("closure", "differential closure of the multiplicity algebra");
    closure->add_option("file", file)->required();
    closure->add_option("--poly", poly_name);

    auto* contact = app.add_subcommand("contact", "order of contact invariants of an arc");
    contact->add_option("file", file)->required();
    contact->add_option("--arc", arc_name)->required();

    auto* nash = app.add_subcommand("nash", "Nash multiplicity sequence by iterated blowups");
    nash->add_option("file", file)->required();
    nash->add_option("--arc", arc_name)->required();
    nash->add_flag("--full", nash_full, "continue past the first drop");

    auto* isolated = app.add_subcommand("isolated", "isolated-point verdict for the origin");
    isolated->add_option("file", file)->required();

    auto* family = app.add_subcommand("family", "arc-family sweep");
    family->add_option("file", file)->required();
    auto* fam_opt = family->add_option("--family", family_name);
    auto* axis_opt = family->add_option("--auto-axis", auto_axis);
    fam_opt->excludes(axis_opt);

    auto* sample = app.add_subcommand("sample", "exhaustive monomial-arc sweep");
    sample->add_option("file", file)->required();
    sample->add_option("--cap", sample_cap);

    auto* verify = app.add_subcommand("verify", "dual-oracle and consistency checks");
    verify->add_option("file", file)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }
    if (*prec_opt) g.precision = prec_flag;
    if (*seed_opt) g.seed = seed_flag;

    json report;
    report["command"] = app.get_subcommands().front()->get_name();
    report["scenario"] = file;
    report["results"] = json::array();
    report["errors"] = json::array();
    std::ostringstream text;

    int code = 0;
    try {
        Scenario sc = load_scenario(file);
        InvariantOptions opt = options_for(sc, g);
        json& results = report["results"];
        CommandContext ctx{sc, opt, results, text, g.json_output};
        if (*closure) cmd_closure(ctx, poly_name);
        else if (*contact) cmd_contact(ctx, arc_name);
        else if (*nash) cmd_nash(ctx, arc_name, nash_full);
        else if (*isolated) cmd_isolated(ctx);
        else if (*family) {
            if (family_name.empty() && auto_axis.empty())
                throw CLI::ValidationError("family", "one of --family / --auto-axis is required");
            cmd_family(ctx, family_name, auto_axis);
        } else if (*sample) cmd_sample(ctx, sample_cap);
        else if (*verify) cmd_verify(ctx);
    } catch (const MathDomainError& e) {
        report["errors"].push_back({{"error", e.name()}, {"message", e.what()}});
        text << "error " << e.name() << ": " << e.what() << "\n";
        code = 2;
    } catch (const ParseError& e) {
        report["errors"].push_back({{"error", "ParseError"}, {"message", e.what()}});
        text << e.what() << "\n";
        code = 1;
    } catch (const std::exception& e) {
        report["errors"].push_back({{"error", "Error"}, {"message", e.what()}});
        text << "error: " << e.what() << "\n";
        code = 1;
    }

    if (g.json_output) out << report.dump(2) << "\n";
    else out << text.str();
    return code;
}

}  // namespace arcsing::cli

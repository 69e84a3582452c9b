// Command-line surface: bound evaluation, threshold tables, family/code
// construction, exhaustive verification, and CSV parameter sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "uhf/bounds.hpp"
#include "uhf/family.hpp"
#include "uhf/io.hpp"

using json = nlohmann::ordered_json;
using namespace uhf;

namespace {

std::string value_str(const BoundValue& v) {
    if (v.exact) return v.exact->str() + " (= " + fmt_double(v.approx) + ")";
    return fmt_double(v.approx);
}

json value_json(const BoundValue& v) {
    json j;
    j["approx"] = v.approx;
    if (v.exact)
        j["exact"] = v.exact->str();
    else
        j["exact"] = nullptr;
    return j;
}

json threshold_json(const Threshold& t) {
    json j;
    switch (t.state) {
        case ThresholdState::applicable:
            j["state"] = "applicable";
            j["value"] = value_json(t.value);
            break;
        case ThresholdState::inapplicable: j["state"] = "inapplicable"; break;
        case ThresholdState::negative_discriminant: j["state"] = "negative_discriminant"; break;
    }
    return j;
}

std::string threshold_str(const Threshold& t) {
    switch (t.state) {
        case ThresholdState::applicable: return value_str(t.value);
        case ThresholdState::inapplicable: return "inapplicable";
        case ThresholdState::negative_discriminant: return "negative discriminant";
    }
    return "?";
}

const char* regime_str(Regime r) {
    switch (r) {
        case Regime::new_regime: return "new";
        case Regime::old_regime: return "old";
        case Regime::none: return "none";
    }
    return "?";
}

void print_bound_report(const BoundReport& rep, bool as_json, std::ostream& out) {
    if (as_json) {
        json j;
        j["kind"] = kind_name(rep.kind);
        j["n"] = rep.n;
        j["m"] = rep.m;
        j["eps"] = rep.eps.str();
        j["old_raw"] = rep.old_raw ? value_json(*rep.old_raw) : json(nullptr);
        j["new_raw"] = rep.new_raw ? value_json(*rep.new_raw) : json(nullptr);
        j["old_N"] = rep.old_adjusted ? json(*rep.old_adjusted) : json(nullptr);
        j["new_N"] = rep.new_adjusted ? json(*rep.new_adjusted) : json(nullptr);
        j["threshold"] = threshold_json(rep.threshold);
        j["dominant"] = dominance_name(rep.dominant);
        j["regime"] = regime_str(rep.regime);
        j["boundary"] = rep.boundary;
        out << j.dump(2) << '\n';
        return;
    }
    out << "kind: " << kind_name(rep.kind) << "\n"
        << "n: " << rep.n << "\n"
        << "m: " << rep.m << "\n"
        << "eps: " << rep.eps.str() << "\n";
    out << "old_raw: " << (rep.old_raw ? value_str(*rep.old_raw) : "inapplicable") << "\n";
    out << "new_raw: " << (rep.new_raw ? value_str(*rep.new_raw) : "inapplicable") << "\n";
    out << "old_N: " << (rep.old_adjusted ? std::to_string(*rep.old_adjusted) : "na") << "\n";
    out << "new_N: " << (rep.new_adjusted ? std::to_string(*rep.new_adjusted) : "na") << "\n";
    out << "threshold: " << threshold_str(rep.threshold) << "\n";
    out << "dominant: " << dominance_name(rep.dominant) << "\n";
    out << "regime: " << regime_str(rep.regime) << (rep.boundary ? " (boundary)" : "") << "\n";
}

std::string family_shape(const HashFamily& fam) {
    return "(" + std::to_string(fam.functions) + "; " + std::to_string(fam.domain) + ", " +
           std::to_string(fam.range) + ") group " +
           (fam.group == RangeGroup::field_additive ? "gf" : "zm");
}

bool n_satisfies(std::uint64_t actual, const BoundValue& raw) {
    if (raw.exact) return Rat(static_cast<std::int64_t>(actual)) >= *raw.exact;
    return static_cast<double>(actual) >= raw.approx - 1e-9 * std::max(1.0, std::fabs(raw.approx));
}

struct MeasurePrinter {
    bool as_json = false;

    json to_json(const HashFamily& fam, const EpsilonReport& rep, Kind kind) const {
        json j;
        j["family"] = {{"N", fam.functions}, {"n", fam.domain}, {"m", fam.range},
                       {"group", fam.group == RangeGroup::field_additive ? "gf" : "zm"}};
        j["kind"] = kind_name(kind);
        j["eps"] = rep.epsilon.str();
        j["worst_count"] = rep.worst_count;
        json w;
        w["a1"] = rep.witness_a1;
        w["a2"] = rep.witness_a2;
        if (rep.witness_b) w["b"] = *rep.witness_b;
        if (rep.witness_values) {
            w["b1"] = rep.witness_values->first;
            w["b2"] = rep.witness_values->second;
        }
        j["witness"] = w;
        if (kind == Kind::SU) j["balanced"] = rep.balanced;
        return j;
    }

    void print(std::ostream& out, const HashFamily& fam, const EpsilonReport& rep,
               Kind kind) const {
        out << "family: " << family_shape(fam) << "\n";
        out << "measured eps (" << kind_name(kind) << "): " << rep.epsilon.str() << " (worst count "
            << rep.worst_count << " of N=" << fam.functions << ")\n";
        out << "witness: a1=" << rep.witness_a1 << " a2=" << rep.witness_a2;
        if (rep.witness_b) out << " b=" << *rep.witness_b;
        if (rep.witness_values)
            out << " b1=" << rep.witness_values->first << " b2=" << rep.witness_values->second;
        out << "\n";
        if (kind == Kind::SU) out << "balanced: " << (rep.balanced ? "yes" : "no") << "\n";
    }
};

// Bound satisfaction of an existing family with the given measured epsilon.
void report_family_bounds(const HashFamily& fam, const EpsilonReport& rep, Kind kind, bool as_json,
                          json* jout, std::ostream& out) {
    if (fam.domain <= fam.range) {
        if (as_json)
            (*jout)["bounds"] = "skipped (needs n > m)";
        else
            out << "bounds: skipped (they require domain > range)\n";
        return;
    }
    if (rep.epsilon <= Rat(0)) {
        if (as_json)
            (*jout)["bounds"] = "skipped (eps = 0)";
        else
            out << "bounds: skipped (measured eps is 0; no lower bound applies)\n";
        return;
    }
    const BoundReport br = compare_bounds(kind, fam.domain, fam.range, rep.epsilon);
    const Rat floor = kind_floor(kind, fam.domain, fam.range);
    bool all_ok = rep.epsilon >= floor;
    json checks = json::array();
    auto check_one = [&](const char* name, const std::optional<BoundValue>& raw) {
        if (!raw) return;
        const bool ok = n_satisfies(fam.functions, *raw);
        all_ok = all_ok && ok;
        if (as_json)
            checks.push_back({{"bound", name}, {"raw", value_json(*raw)}, {"satisfied", ok}});
        else
            out << "  " << name << " raw " << value_str(*raw) << ": N=" << fam.functions
                << (ok ? " satisfies" : " VIOLATES") << "\n";
    };
    if (!as_json) {
        out << "floor: " << floor.str() << " -> measured eps "
            << (rep.epsilon >= floor ? "satisfies" : "VIOLATES") << "\n";
        out << "bounds at measured eps:\n";
    }
    check_one("old", br.old_raw);
    check_one("new", br.new_raw);
    if (as_json) {
        (*jout)["floor"] = floor.str();
        (*jout)["floor_satisfied"] = rep.epsilon >= floor;
        (*jout)["bound_checks"] = checks;
        (*jout)["all_bounds_satisfied"] = all_ok;
    } else {
        out << "all applicable bounds satisfied: " << (all_ok ? "yes" : "NO") << "\n";
    }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const Rat v = Rat::parse(s);
        if (!v.is_integer() || v.num < 0) fail(Err::Parse, "expected an integer or a..b range");
        return {static_cast<std::uint64_t>(v.num), static_cast<std::uint64_t>(v.num)};
    }
    const Rat a = Rat::parse(s.substr(0, pos));
    const Rat b = Rat::parse(s.substr(pos + 2));
    if (!a.is_integer() || !b.is_integer() || a.num < 0 || b.num < 0 || a.num > b.num)
        fail(Err::Parse, "malformed range '" + s + "'");
    return {static_cast<std::uint64_t>(a.num), static_cast<std::uint64_t>(b.num)};
}

std::vector<Rat> parse_eps_grid(const std::string& s) {
    std::vector<Rat> grid;
    if (s.empty()) return grid;
    const auto p1 = s.find(':');
    if (p1 == std::string::npos) {
        grid.push_back(Rat::parse(s));
        return grid;
    }
    const auto p2 = s.find(':', p1 + 1);
    if (p2 == std::string::npos) fail(Err::Parse, "eps grid must be start:step:end");
    const Rat start = Rat::parse(s.substr(0, p1));
    const Rat step = Rat::parse(s.substr(p1 + 1, p2 - p1 - 1));
    const Rat end = Rat::parse(s.substr(p2 + 1));
    if (step <= Rat(0)) fail(Err::Parse, "eps grid step must be positive");
    for (Rat e = start; e <= end; e += step) grid.push_back(e);
    return grid;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) fail(Err::Parse, "cannot write '" + path + "'");
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"epsilon-universal hash families from codes: constructions, exhaustive "
                 "verification, and lower-bound comparison"};
    app.require_subcommand(1);

    std::string kind_str, eps_str, out_path, in_path;
    std::uint64_t n = 0;
    unsigned m = 0, q = 0, kdim = 0, iexp = 0;
    std::uint64_t budget = 100'000'000;
    unsigned threads = 0;
    bool as_json = false;
    bool generic = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine-readable output"); };

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "evaluate old and new lower bounds at a point");
    bound_cmd->add_option("kind", kind_str, "family kind: u, du or su")->required();
    bound_cmd->add_option("--n", n, "domain size")->required();
    bound_cmd->add_option("--m", m, "range size")->required();
    bound_cmd->add_option("--eps", eps_str, "epsilon as an exact fraction p/q")->required();
    add_json(bound_cmd);
    bound_cmd->callback([&] {
        const BoundReport rep = compare_bounds(parse_kind(kind_str), n, m, Rat::parse(eps_str));
        print_bound_report(rep, as_json, std::cout);
    });

    // thresholds
    auto* thr_cmd = app.add_subcommand("thresholds", "regime thresholds eps1..eps4 for (n, m)");
    thr_cmd->add_option("--n", n)->required();
    thr_cmd->add_option("--m", m)->required();
    add_json(thr_cmd);
    thr_cmd->callback([&] {
        const ThresholdSet ts = thresholds(n, m);
        if (as_json) {
            json j;
            j["n"] = ts.n;
            j["m"] = ts.m;
            j["eps1"] = threshold_json(ts.eps1);
            j["eps2"] = threshold_json(ts.eps2);
            j["eps3"] = threshold_json(ts.eps3);
            j["eps4"] = threshold_json(ts.eps4);
            j["quad"] = {{"a", ts.quad.a.str()},
                         {"b", value_json(ts.quad.b)},
                         {"c", value_json(ts.quad.c)},
                         {"discriminant", ts.quad.discriminant}};
            std::cout << j.dump(2) << '\n';
            return;
        }
        std::cout << "n: " << ts.n << "\nm: " << ts.m << "\n";
        std::cout << "eps1: " << threshold_str(ts.eps1) << "\n";
        std::cout << "eps2: " << threshold_str(ts.eps2) << "\n";
        std::cout << "eps3: " << threshold_str(ts.eps3) << "\n";
        std::cout << "eps4: " << threshold_str(ts.eps4) << "\n";
        std::cout << "quad: a=" << ts.quad.a.str() << " b=" << value_str(ts.quad.b)
                  << " c=" << value_str(ts.quad.c)
                  << " discriminant=" << fmt_double(ts.quad.discriminant) << "\n";
    });

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "which bound dominates at (kind, n, m, eps)");
    cmp_cmd->add_option("kind", kind_str)->required();
    cmp_cmd->add_option("--n", n)->required();
    cmp_cmd->add_option("--m", m)->required();
    cmp_cmd->add_option("--eps", eps_str)->required();
    add_json(cmp_cmd);
    cmp_cmd->callback([&] {
        const BoundReport rep = compare_bounds(parse_kind(kind_str), n, m, Rat::parse(eps_str));
        if (as_json) {
            json j;
            j["kind"] = kind_name(rep.kind);
            j["n"] = rep.n;
            j["m"] = rep.m;
            j["eps"] = rep.eps.str();
            j["dominant"] = dominance_name(rep.dominant);
            j["regime"] = regime_str(rep.regime);
            j["boundary"] = rep.boundary;
            j["threshold"] = threshold_json(rep.threshold);
            std::cout << j.dump(2) << '\n';
            return;
        }
        std::cout << "dominant: " << dominance_name(rep.dominant) << "\n";
        std::cout << "threshold: " << threshold_str(rep.threshold) << "\n";
        std::cout << "regime: " << regime_str(rep.regime) << (rep.boundary ? " (boundary)" : "")
                  << "\n";
    });

    // construct
    auto* con_cmd = app.add_subcommand("construct", "build a family or code and measure it");
    con_cmd->require_subcommand(1);
    MeasurePrinter printer;

    auto finish_family = [&](const HashFamily& fam, Kind kind, const EpsilonReport& rep) {
        printer.as_json = as_json;
        if (!out_path.empty()) save_family(fam, out_path);
        if (as_json) {
            json j = printer.to_json(fam, rep, kind);
            report_family_bounds(fam, rep, kind, true, &j, std::cout);
            if (!out_path.empty()) j["wrote"] = out_path;
            std::cout << j.dump(2) << '\n';
        } else {
            printer.print(std::cout, fam, rep, kind);
            report_family_bounds(fam, rep, kind, false, nullptr, std::cout);
            if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
        }
    };

    auto* con_rs = con_cmd->add_subcommand("rs", "evaluation-point family from a Reed-Solomon code");
    con_rs->add_option("--q", q)->required();
    con_rs->add_option("--k", kdim)->required();
    con_rs->add_option("--n", n)->required();
    con_rs->add_option("-o,--output", out_path, "family file to write");
    con_rs->add_option("--budget", budget, "measurement event cap");
    con_rs->add_option("--threads", threads);
    add_json(con_rs);
    con_rs->callback([&] {
        const LinearCode code = rs_code(q, kdim, n);
        const HashFamily fam = code_to_family(code);
        const EpsilonReport rep = measure_epsilon_u(fam, {budget, threads});
        finish_family(fam, Kind::U, rep);
    });

    auto* con_par = con_cmd->add_subcommand("parity", "the [n, n-1, 2, q] code containing all-ones");
    con_par->add_option("--q", q)->required();
    con_par->add_option("--n", n)->required();
    con_par->add_option("-o,--output", out_path, "code file to write");
    con_par->add_option("--budget", budget);
    con_par->add_option("--threads", threads);
    add_json(con_par);
    con_par->callback([&] {
        const LinearCode code = parity_mds_with_allones(q, n);
        const std::size_t d = min_distance(code);
        json j;
        if (as_json) {
            j["code"] = {{"q", code.q()}, {"k", code.dim}, {"N", code.length}, {"D", d}};
            j["mds"] = is_mds(code);
        } else {
            std::cout << "code: [" << code.length << ", " << code.dim << ", " << d << ", "
                      << code.q() << "]\n";
            std::cout << "mds: " << (is_mds(code) ? "yes" : "no") << "\n";
        }
        try {
            const HashFamily fam = code_to_family(code);
            const EpsilonReport rep = measure_epsilon_u(fam, {budget, threads});
            if (as_json) {
                j["family_eps"] = rep.epsilon.str();
                j["family"] = {{"N", fam.functions}, {"n", fam.domain}, {"m", fam.range}};
            } else {
                std::cout << "induced family: " << family_shape(fam)
                          << " with eps " << rep.epsilon.str() << "\n";
            }
        } catch (const Error& e) {
            if (e.kind() != Err::TooLarge) throw;
            if (as_json)
                j["family_eps"] = "skipped (budget)";
            else
                std::cout << "induced family: measurement skipped (" << e.what() << ")\n";
        }
        if (!out_path.empty()) {
            save_linear_code(code, out_path);
            if (as_json)
                j["wrote"] = out_path;
            else
                std::cout << "wrote " << out_path << "\n";
        }
        if (as_json) std::cout << j.dump(2) << '\n';
    });

    auto* con_sub = con_cmd->add_subcommand(
        "subfamily", "family from the (2q-1)*q^(q^(i+1)-3)-word subcode of the parity code");
    con_sub->add_option("--q", q)->required();
    con_sub->add_option("--i", iexp)->required();
    con_sub->add_option("-o,--output", out_path, "family file to write");
    con_sub->add_option("--budget", budget);
    con_sub->add_option("--threads", threads);
    add_json(con_sub);
    con_sub->callback([&] {
        if (q < 2 || iexp < 1) fail(Err::BadParams, "subfamily needs q >= 2 and i >= 1");
        std::uint64_t len = 1;
        for (unsigned t = 0; t <= iexp; ++t) {
            if (len > 64 / q) fail(Err::TooLarge, "q^(i+1) above 64 is too large to enumerate");
            len *= q;
        }
        BigUint size = BigUint::pow(q, static_cast<unsigned>(len - 3));
        size.mul_u64(2 * q - 1);
        if (!size.fits_u64()) fail(Err::TooLarge, "subcode size exceeds 2^64");
        const LinearCode parity = parity_mds_with_allones(q, len);
        const GenericCode sub = subcode_select(parity, size.as_u64());
        const HashFamily fam = code_to_family(sub);
        const EpsilonReport rep = measure_epsilon_u(fam, {budget, threads});
        finish_family(fam, Kind::U, rep);
    });

    auto* con_delta = con_cmd->add_subcommand(
        "delta", "difference family from the parity code's cosets of the all-ones line");
    con_delta->add_option("--q", q)->required();
    con_delta->add_option("--n", n)->required();
    con_delta->add_option("-o,--output", out_path, "family file to write");
    con_delta->add_option("--budget", budget);
    con_delta->add_option("--threads", threads);
    add_json(con_delta);
    con_delta->callback([&] {
        const LinearCode code = parity_mds_with_allones(q, n);
        const HashFamily fam = code_to_delta_family(code);
        const EpsilonReport rep = measure_epsilon_delta(fam, {budget, threads});
        finish_family(fam, Kind::DeltaU, rep);
    });

    // convert
    auto* conv_cmd = app.add_subcommand("convert", "move between code and family files");
    conv_cmd->require_subcommand(1);

    auto* c2f = conv_cmd->add_subcommand("to-family", "code file -> family file");
    c2f->add_option("input", in_path)->required();
    c2f->add_option("-o,--output", out_path)->required();
    c2f->add_flag("--generic", generic, "read an explicit codeword list instead of a generator");
    c2f->callback([&] {
        const HashFamily fam = generic ? code_to_family(load_generic_code(in_path))
                                       : code_to_family(load_linear_code(in_path));
        save_family(fam, out_path);
        std::cout << "family: " << family_shape(fam) << "\nwrote " << out_path << "\n";
    });

    auto* f2c = conv_cmd->add_subcommand("to-code", "family file -> codeword list file");
    f2c->add_option("input", in_path)->required();
    f2c->add_option("-o,--output", out_path)->required();
    f2c->callback([&] {
        const FamilyCodeResult res = family_to_code(load_family(in_path));
        save_generic_code(res.code, out_path);
        std::string dist = "?";
        try {
            dist = std::to_string(min_distance(res.code));
        } catch (const Error&) {
            // too few words or past the cap; leave unknown
        }
        std::cout << "code: (" << res.code.length << ", " << res.code.size() << ", " << dist
                  << ", " << res.code.q() << ")\n";
        if (res.duplicates_removed)
            std::cout << "note: duplicate columns were collapsed; the family is not injective\n";
        std::cout << "wrote " << out_path << "\n";
    });

    auto* c2d = conv_cmd->add_subcommand("to-delta-family",
                                         "linear code file (containing all-ones) -> family file");
    c2d->add_option("input", in_path)->required();
    c2d->add_option("-o,--output", out_path)->required();
    c2d->callback([&] {
        const HashFamily fam = code_to_delta_family(load_linear_code(in_path));
        save_family(fam, out_path);
        std::cout << "family: " << family_shape(fam) << "\nwrote " << out_path << "\n";
    });

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "measure a family file exhaustively");
    ver_cmd->add_option("kind", kind_str)->required();
    ver_cmd->add_option("input", in_path)->required();
    ver_cmd->add_option("--budget", budget, "counting-event cap (default 1e8)");
    ver_cmd->add_option("--threads", threads);
    add_json(ver_cmd);
    ver_cmd->callback([&] {
        const Kind kind = parse_kind(kind_str);
        const HashFamily fam = load_family(in_path);
        const MeasureOptions opt{budget, threads};
        EpsilonReport rep;
        switch (kind) {
            case Kind::U: rep = measure_epsilon_u(fam, opt); break;
            case Kind::DeltaU: rep = measure_epsilon_delta(fam, opt); break;
            case Kind::SU: rep = measure_epsilon_su(fam, opt); break;
        }
        printer.as_json = as_json;
        if (as_json) {
            json j = printer.to_json(fam, rep, kind);
            report_family_bounds(fam, rep, kind, true, &j, std::cout);
            std::cout << j.dump(2) << '\n';
        } else {
            printer.print(std::cout, fam, rep, kind);
            report_family_bounds(fam, rep, kind, false, nullptr, std::cout);
        }
    });

    // sweep
    std::string n_range_str, m_range_str, eps_grid_str;
    std::uint64_t n_step = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "bound comparison grid as CSV");
    sweep_cmd->add_option("kind", kind_str)->required();
    sweep_cmd->add_option("--n", n_range_str, "n or a..b range")->required();
    sweep_cmd->add_option("--m", m_range_str, "m or a..b range")->required();
    sweep_cmd->add_option("--n-step", n_step);
    sweep_cmd->add_option("--eps", eps_grid_str, "start:step:end, exact fractions");
    sweep_cmd->add_option("-o,--output", out_path, "CSV path (default stdout)");
    sweep_cmd->callback([&] {
        SweepRequest req;
        req.kind = parse_kind(kind_str);
        std::tie(req.n_begin, req.n_end) = parse_range(n_range_str);
        const auto mr = parse_range(m_range_str);
        req.m_begin = static_cast<unsigned>(mr.first);
        req.m_end = static_cast<unsigned>(mr.second);
        req.n_step = n_step;
        req.eps_grid = parse_eps_grid(eps_grid_str);
        std::ofstream file;
        run_sweep(req, open_output(out_path, file));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    } catch (const Error& e) {
        std::cerr << "error (" << err_name(e.kind()) << "): " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

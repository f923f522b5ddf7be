#include "bohrlab/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohrlab/certify.hpp"
#include "bohrlab/families.hpp"
#include "bohrlab/solver.hpp"

namespace bohrlab {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kGrammar =
    "family grammar:\n"
    "  concave:p=<real>                   concave univalent, pole p in (0,1)\n"
    "  convex:classical                   convex, phi = (1+z)/(1-z)\n"
    "  convex:alpha=<real>                convex of order alpha in [0,1)\n"
    "  convex:janowski:A=<real>,B=<real>  Janowski convex, -1 <= B < A <= 1\n"
    "  starlike:classical                 starlike, phi = (1+z)/(1-z)\n"
    "  starlike:alpha=<real>              starlike of order alpha in [0,1)\n"
    "  starlike:janowski:A=<real>,B=<real> Janowski starlike\n"
    "  bounded                            bounded-analytic baseline\n"
    "  univalent                          univalent-subordination baseline\n";

InequalityKind parse_kind(const std::string& s, int n) {
    if (s == "bohr") return {InequalityType::bohr, n};
    if (s == "rogosinski" || s == "bohr_rogosinski") return {InequalityType::bohr_rogosinski, n};
    throw ParseError("unknown kind '" + s + "' (expected bohr or rogosinski)", s);
}

double jnum(double x, bool full) { return full ? x : round_sig12(x); }

ordered_json result_record(const FunctionFamily& fam, const QuasiParam& q, InequalityKind kind,
                           const RadiusResult& res, bool full) {
    ordered_json j;
    j["query"] = {{"family", to_string(fam)}, {"K", jnum(q.K, full)}, {"kind", to_string(kind.type)}};
    if (kind.type == InequalityType::bohr_rogosinski &&
        fam.kind == FunctionFamily::Kind::bounded_analytic)
        j["query"]["N"] = kind.n;
    j["value"] = jnum(res.value, full);
    j["residual"] = jnum(res.residual, full);
    j["method"] = to_string(res.method);
    j["sharp"] = res.sharp;
    j["clamped_at_one_third"] = res.clamped_at_one_third;
    j["unclamped_root"] = jnum(res.unclamped_root, full);
    j["bracket"] = {jnum(res.bracket_lo, full), jnum(res.bracket_hi, full)};
    return j;
}

struct SweepRow {
    double value;
    RadiusResult res;
};

// Axis override; throws ParseError for range violations and CapabilityError
// for family/axis mismatches.
RadiusQuery apply_axis(const std::string& axis, double v, FunctionFamily fam, QuasiParam q,
                       InequalityKind kind) {
    if (axis == "K") {
        if (!(v >= 1.0)) throw ParseError("K out of [1, inf)", format_sig(v));
        return {fam, QuasiParam::from_K(v), kind};
    }
    if (axis == "p") {
        if (fam.kind != FunctionFamily::Kind::concave_pole)
            throw CapabilityError("axis p applies to concave families only");
        if (!(v > 0.0) || !(v < 1.0)) throw ParseError("p out of (0,1)", format_sig(v));
        fam.p = v;
        return {fam, q, kind};
    }
    if (axis == "alpha") {
        if (!fam.is_ma_minda() || fam.phi.kind != MaMindaPhi::Kind::order_alpha)
            throw CapabilityError("axis alpha applies to convex:alpha / starlike:alpha families");
        if (!(v >= 0.0) || v >= 1.0) throw ParseError("alpha out of [0,1)", format_sig(v));
        fam.phi.alpha = v;
        return {fam, q, kind};
    }
    if (axis == "A" || axis == "B") {
        if (!fam.is_ma_minda() || fam.phi.kind != MaMindaPhi::Kind::janowski)
            throw CapabilityError("axis " + axis + " applies to janowski families only");
        double A = axis == "A" ? v : fam.phi.A;
        double B = axis == "B" ? v : fam.phi.B;
        if (!(B >= -1.0) || !(B < A) || !(A <= 1.0))
            throw ParseError("janowski parameters require -1 <= B < A <= 1", format_sig(v));
        fam.phi.A = A;
        fam.phi.B = B;
        return {fam, q, kind};
    }
    if (axis == "N") {
        if (v != std::floor(v) || v < 1.0)
            throw ParseError("N must be an integer >= 1", format_sig(v));
        return {FunctionFamily::bounded(), q, {InequalityType::bohr_rogosinski, static_cast<int>(v)}};
    }
    throw ParseError("unknown sweep axis '" + axis + "'", axis);
}

RadiusResult solve_for_axis(const std::string& axis, double v, const FunctionFamily& fam,
                            const QuasiParam& q, InequalityKind kind) {
    return solve_radius(apply_axis(axis, v, fam, q, kind));
}

std::vector<double> parse_values(const std::string& values, const std::string& range) {
    std::vector<double> out;
    if (!values.empty()) {
        size_t pos = 0;
        while (pos <= values.size()) {
            const size_t comma = values.find(',', pos);
            const std::string tok =
                values.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw ParseError("empty entry in --values", values);
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size())
                throw ParseError("bad number '" + tok + "' in --values", tok);
            out.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else if (!range.empty()) {
        double start = 0, stop = 0;
        long count = 0;
        if (std::sscanf(range.c_str(), "%lf:%lf:%ld", &start, &stop, &count) != 3 || count < 1)
            throw ParseError("range must be start:stop:count with count >= 1", range);
        if (count == 1) {
            out.push_back(start);
        } else {
            for (long i = 0; i < count; ++i)
                out.push_back(start + (stop - start) * static_cast<double>(i) /
                                          static_cast<double>(count - 1));
        }
    }
    if (out.empty()) throw ParseError("sweep needs a nonempty --values or --range", "");
    for (size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            throw ParseError("sweep values must be strictly increasing", format_sig(out[i]));
    return out;
}

int cmd_compute(const std::string& family_spec, double K, const std::string& kind_str, int n,
                bool full) {
    const auto fam = parse_family(family_spec);
    const auto q = QuasiParam::from_K(K);
    const auto kind = parse_kind(kind_str, n);
    const auto res = solve_radius({fam, q, kind});
    if (!res.note.empty()) std::cerr << "note: " << res.note << "\n";
    std::cout << result_record(fam, q, kind, res, full).dump() << "\n";
    return 0;
}

int cmd_sweep(const std::string& axis, const std::string& values, const std::string& range,
              const std::string& family_spec, double K, const std::string& kind_str,
              const std::string& format, bool full) {
    const auto fam = parse_family(family_spec);
    const auto q = QuasiParam::from_K(K);
    const auto kind = parse_kind(kind_str, 1);
    const auto vals = parse_values(values, range);

    // validate every grid point up front so errors precede any output
    for (double v : vals) (void)apply_axis(axis, v, fam, q, kind);

    std::vector<RadiusResult> results(vals.size());
    const int nw = std::min<int>(worker_count(), static_cast<int>(vals.size()));
    if (nw <= 1) {
        for (size_t i = 0; i < vals.size(); ++i)
            results[i] = solve_for_axis(axis, vals[i], fam, q, kind);
    } else {
        std::vector<std::future<void>> futs;
        futs.reserve(static_cast<size_t>(nw));
        std::atomic<size_t> next{0};
        for (int w = 0; w < nw; ++w)
            futs.push_back(std::async(std::launch::async, [&] {
                for (size_t i = next.fetch_add(1); i < vals.size(); i = next.fetch_add(1))
                    results[i] = solve_for_axis(axis, vals[i], fam, q, kind);
            }));
        for (auto& f : futs) f.get();
    }

    if (format == "csv") {
        std::cout << "axis,value,radius,residual,method,sharp\n";
        for (size_t i = 0; i < vals.size(); ++i) {
            const auto& r = results[i];
            std::cout << axis << ',' << format_sig(vals[i], full) << ','
                      << format_sig(r.value, full) << ',' << format_sig(r.residual, full) << ','
                      << to_string(r.method) << ',' << (r.sharp ? "true" : "false") << "\n";
        }
    } else if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < vals.size(); ++i) {
            const auto& r = results[i];
            ordered_json row;
            row["axis"] = axis;
            row["value"] = jnum(vals[i], full);
            row["radius"] = jnum(r.value, full);
            row["residual"] = jnum(r.residual, full);
            row["method"] = to_string(r.method);
            row["sharp"] = r.sharp;
            arr.push_back(row);
        }
        std::cout << arr.dump() << "\n";
    } else {
        throw ParseError("format must be csv or json", format);
    }
    return 0;
}

int cmd_certify(const std::string& family_spec, double K, const std::string& kind_str, int trials,
                std::uint64_t seed, int n_trunc, bool full) {
    if (trials < 1) throw ParseError("trials must be >= 1", std::to_string(trials));
    const auto fam = parse_family(family_spec);
    const auto q = QuasiParam::from_K(K);
    const auto kind = parse_kind(kind_str, 1);

    const auto res = solve_radius({fam, q, kind});
    const double r_ens = res.value * (1.0 - 1e-6);
    const auto rep = run_ensemble(fam, q, kind.type, trials, seed, r_ens, n_trunc);

    const double r_extremal = res.value * (1.0 + 1e-3);
    const auto ex = extremal_sample(fam, q, cplx(1.0), n_trunc);
    const Certificate exc = kind.type == InequalityType::bohr
                                ? check_bohr(ex, fam, r_extremal)
                                : check_rogosinski(ex, fam, r_extremal);
    const bool extremal_ok = !res.sharp || exc.verdict == Verdict::violated;

    ordered_json j;
    j["family"] = to_string(fam);
    j["K"] = jnum(q.K, full);
    j["kind"] = to_string(kind.type);
    j["r"] = jnum(rep.r, full);
    j["trials"] = rep.trials;
    j["holds"] = rep.holds;
    j["violated"] = rep.violated;
    j["inconclusive"] = rep.inconclusive;
    j["min_margin"] = jnum(rep.min_margin, full);
    j["seed_base"] = rep.seed_base;
    j["radius"] = jnum(res.value, full);
    j["sharp"] = res.sharp;
    j["extremal"] = {{"r", jnum(r_extremal, full)},
                     {"verdict", to_string(exc.verdict)},
                     {"margin", jnum(exc.margin, full)}};
    std::cout << j.dump() << "\n";

    return (rep.violated == 0 && extremal_ok) ? 0 : 4;
}

int cmd_baselines(int n_max, const std::string& k_values, bool full) {
    if (n_max < 1) throw ParseError("n-max must be >= 1", std::to_string(n_max));
    const auto ks = parse_values(k_values, "");
    std::cout << "kind,param,radius\n";
    const auto q1 = QuasiParam::from_K(1.0);
    std::cout << "bohr_classic,," << format_sig(baseline_radius({BaselineType::bohr_classic, 1}, q1).value, full)
              << "\n";
    for (int n = 1; n <= n_max; ++n)
        std::cout << "rogosinski,N=" << n << ','
                  << format_sig(baseline_radius({BaselineType::rogosinski_n, n}, q1).value, full)
                  << "\n";
    for (double K : ks) {
        if (!(K >= 1.0)) throw ParseError("K out of [1, inf)", format_sig(K));
        const auto q = QuasiParam::from_K(K);
        std::cout << "univalent,K=" << format_sig(K, full) << ','
                  << format_sig(baseline_radius({BaselineType::univalent_subordination, 1}, q).value,
                                full)
                  << "\n";
    }
    return 0;
}

} // namespace

std::string format_sig(double x, bool full_precision) {
    char buf[48];
    std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.12g", x);
    return buf;
}

double round_sig12(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format_sig(x, false).c_str(), nullptr);
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"bohrlab: certified Bohr and Bohr-Rogosinski radii for K-quasiconformal "
                 "harmonic mappings with subordinate analytic part"};
    app.footer(kGrammar);
    app.require_subcommand(1);

    std::string family_spec, kind_str = "bohr";
    double K = 1.0;
    int rog_n = 1;
    bool full = false;

    auto* compute = app.add_subcommand("compute", "radius for one family/K/kind query");
    compute->add_option("family", family_spec, "family spec (see grammar below)")->required();
    compute->add_option("--K", K, "quasiconformality constant K >= 1");
    compute->add_option("--kind", kind_str, "bohr | rogosinski");
    compute->add_option("--N", rog_n, "partial-sum index for the bounded rogosinski baseline");
    compute->add_flag("--full-precision", full, "emit full binary precision");

    std::string axis, values, range, format = "csv";
    auto* sweep = app.add_subcommand("sweep", "radius table along one parameter axis");
    sweep->add_option("--axis", axis, "K | p | alpha | A | B | N")->required();
    sweep->add_option("--values", values, "comma-separated grid, strictly increasing");
    sweep->add_option("--range", range, "start:stop:count linear grid");
    sweep->add_option("--family", family_spec, "family spec")->required();
    sweep->add_option("--K", K, "fixed K");
    sweep->add_option("--kind", kind_str, "bohr | rogosinski");
    sweep->add_option("--format", format, "csv | json");
    sweep->add_flag("--full-precision", full, "emit full binary precision");

    int trials = 100, n_trunc = 2048;
    std::uint64_t seed = 0;
    auto* certify = app.add_subcommand("certify", "Monte-Carlo + extremal certification run");
    certify->add_option("family", family_spec, "family spec")->required();
    certify->add_option("--K", K, "quasiconformality constant K >= 1");
    certify->add_option("--kind", kind_str, "bohr | rogosinski");
    certify->add_option("--trials", trials, "random samples (>= 1)");
    certify->add_option("--seed", seed, "ensemble seed base (echoed in output)");
    certify->add_option("--n", n_trunc, "series truncation order");
    certify->add_flag("--full-precision", full, "emit full binary precision");

    int n_max = 8;
    std::string k_values = "1,2,5,10,100";
    auto* baselines = app.add_subcommand("baselines", "classical baseline radii table");
    baselines->add_option("--n-max", n_max, "rogosinski rows N=1..n_max");
    baselines->add_option("--K-values", k_values, "K grid for the univalent rows");
    baselines->add_flag("--full-precision", full, "emit full binary precision");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return cmd_compute(family_spec, K, kind_str, rog_n, full);
        if (sweep->parsed())
            return cmd_sweep(axis, values, range, family_spec, K, kind_str, format, full);
        if (certify->parsed())
            return cmd_certify(family_spec, K, kind_str, trials, seed, n_trunc, full);
        if (baselines->parsed()) return cmd_baselines(n_max, k_values, full);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace bohrlab

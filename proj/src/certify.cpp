#include "bohrlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <thread>

namespace bohrlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOneThird = 1.0 / 3.0;

// Seeded generator with platform-independent double extraction.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
    cplx disk(double radius) {
        const double m = radius * std::sqrt(uniform());
        return std::polar(m, 2.0 * std::numbers::pi * uniform());
    }
};

// multiply the dense truncated series by (z + t), in place
void mul_linear_zero(std::vector<cplx>& c, cplx t) {
    for (int n = static_cast<int>(c.size()) - 1; n >= 1; --n)
        c[static_cast<size_t>(n)] = c[static_cast<size_t>(n - 1)] + t * c[static_cast<size_t>(n)];
    c[0] *= t;
}

// divide the dense truncated series by (1 + c z), in place
void div_linear_pole(std::vector<cplx>& v, cplx c) {
    for (size_t n = 1; n < v.size(); ++n) v[n] -= c * v[n - 1];
}

// Truncated series of k e^{i psi} (z+t)/(1+conj(t) z) with a rigorous
// geometric tail; a plain degree-1 polynomial when t = 0.
TruncatedSeries dilatation_series(const DilatationSpec& dil, int n_trunc) {
    std::vector<cplx> c(static_cast<size_t>(n_trunc) + 1, cplx(0.0));
    const cplx scale = std::polar(dil.modulus, dil.psi);
    if (!dil.blaschke) {
        c[0] = scale;
        return TruncatedSeries(std::move(c), 1.0);
    }
    const cplx t = dil.zero;
    const cplx ct = std::conj(t);
    c[0] = scale * t;
    const double one_m = 1.0 - std::norm(t);
    cplx pw = scale * one_m;
    for (int n = 1; n <= n_trunc; ++n) {
        c[static_cast<size_t>(n)] = pw;
        pw *= -ct;
    }
    TruncatedSeries s(std::move(c), 1.0);
    const double q = std::abs(t);
    if (q > 1e-15)
        s.tail = TailBound::geometric(dil.modulus * (1.0 - q * q) / q, q, n_trunc);
    return s;
}

void verify_sense_preserving(const TruncatedSeries& hp, const TruncatedSeries& gp, double k,
                             double probe_radius, int n_points = 256) {
    for (int j = 0; j < n_points; ++j) {
        const cplx z = std::polar(probe_radius, 2.0 * std::numbers::pi * j / n_points);
        const double hv = std::abs(hp.eval(z));
        const double gv = std::abs(gp.eval(z));
        if (gv > k * hv * (1.0 + 1e-9) + 1e-12)
            throw ConstructionError("sample is not sense-preserving at the probe circle: |g'| = " +
                                    std::to_string(gv) + " > k|h'| = " + std::to_string(k * hv));
    }
}

double lemma_cap_check(double r) {
    if (!(r >= 0.0) || r > kOneThird + 1e-15)
        throw std::domain_error("lemma gives no guarantee beyond r = 1/3");
    return r;
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Certificate Certificate::make(double lhs, double lhs_tail, double rhs) {
    Certificate c;
    c.lhs = lhs;
    c.lhs_tail = lhs_tail;
    c.rhs = rhs;
    c.margin = rhs - lhs - lhs_tail;
    if (c.margin >= 0.0)
        c.verdict = Verdict::holds;
    else if (lhs - rhs > lhs_tail)
        c.verdict = Verdict::violated;
    else
        c.verdict = Verdict::inconclusive;
    return c;
}

TruncatedSeries schwarz_from_params(double theta, const std::vector<cplx>& zeros, double cap,
                                    int n_trunc) {
    if (!(cap > 0.0) || cap >= 1.0)
        throw std::invalid_argument("schwarz_from_params: cap must lie in (0,1)");
    if (zeros.size() > 3)
        throw std::invalid_argument("schwarz_from_params: at most 3 Blaschke factors");
    if (n_trunc < static_cast<int>(zeros.size()) + 1)
        throw std::invalid_argument("schwarz_from_params: truncation too short");
    for (const auto& t : zeros)
        if (std::abs(t) > 0.9)
            throw std::invalid_argument("schwarz_from_params: factor zeros must satisfy |t| <= 0.9");

    std::vector<cplx> c(static_cast<size_t>(n_trunc) + 1, cplx(0.0));
    c[1] = std::polar(cap, theta);
    double qmax = 0.0;
    for (const auto& t : zeros) {
        mul_linear_zero(c, t);
        div_linear_pole(c, std::conj(t));
        qmax = std::max(qmax, std::abs(t));
    }
    TruncatedSeries s(std::move(c), 1.0);
    if (qmax > 1e-15) {
        // the product is analytic past the unit circle, up to the nearest
        // reflected pole at 1/qmax
        const double R = 0.98 / qmax;
        double m_b = 1.0;
        for (const auto& t : zeros) m_b *= (R + std::abs(t)) / (1.0 - std::abs(t) * R);
        s.tail = TailBound::cauchy(cap * R * m_b, R, n_trunc);
    }
    return s;
}

TruncatedSeries sample_schwarz(std::uint64_t seed, int degree, double cap, int n_trunc) {
    if (degree < 1 || degree > 4)
        throw std::invalid_argument("sample_schwarz: degree must lie in [1,4]");
    Rng rng(seed);
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    std::vector<cplx> zeros;
    for (int j = 0; j < degree - 1; ++j) zeros.push_back(rng.disk(0.9));
    return schwarz_from_params(theta, zeros, cap, n_trunc);
}

double schwarz_poly_cap(const TruncatedSeries& omega, double cap) {
    return cap + omega.tail.at(1.0 - 1e-9);
}

HarmonicSample build_sample(const FunctionFamily& f, const QuasiParam& q,
                            const TruncatedSeries& omega, double omega_cap,
                            const DilatationSpec& dil, int n_trunc) {
    if (dil.modulus > q.k * (1.0 + 1e-12))
        throw ConstructionError("build_sample: dilatation sup exceeds the quasiconformal bound k");

    HarmonicSample s;
    s.family = f;
    s.dilatation_bound = q.k;
    s.prov.is_extremal = false;

    s.h = subordinate_series(f, omega, n_trunc, omega_cap);
    auto hp = differentiate(s.h);

    if (dil.modulus == 0.0) {
        s.g = TruncatedSeries(std::vector<cplx>(static_cast<size_t>(n_trunc) + 1, cplx(0.0)),
                              s.h.validity_radius);
    } else if (!dil.blaschke) {
        // g' = k e^{i psi} h' integrates to a scalar multiple of h - h(0)
        s.g = scalar_multiply(std::polar(dil.modulus, dil.psi), s.h);
        s.g.coeffs[0] = cplx(0.0);
    } else {
        auto wd = dilatation_series(dil, n_trunc);
        wd.validity_radius = s.h.validity_radius; // evaluate products on the common disk
        auto gp = cauchy_product(wd, hp, std::max(0, n_trunc - 1));
        s.g = integrate_from_zero(gp);
        s.g.coeffs.resize(static_cast<size_t>(n_trunc) + 1, cplx(0.0));
    }

    if (dil.modulus > 0.0) {
        auto gp = differentiate(s.g);
        verify_sense_preserving(hp, gp, dil.modulus, 0.8 * s.h.validity_radius);
    }
    return s;
}

HarmonicSample random_sample(const FunctionFamily& f, const QuasiParam& q, std::uint64_t seed,
                             int n_trunc) {
    Rng rng(seed);
    const int degree = 1 + rng.below(4);
    const double cap_max =
        f.kind == FunctionFamily::Kind::concave_pole ? 0.9 * f.p : 0.9;
    const double rho = rng.uniform(0.1 * cap_max, cap_max);
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    std::vector<cplx> zeros;
    for (int j = 0; j < degree - 1; ++j) zeros.push_back(rng.disk(0.9));
    auto omega = schwarz_from_params(theta, zeros, rho, n_trunc);

    DilatationSpec dil;
    dil.modulus = q.k;
    dil.psi = 2.0 * std::numbers::pi * rng.uniform();
    dil.blaschke = rng.uniform() < 0.5;
    if (dil.blaschke) dil.zero = rng.disk(0.9);

    auto s = build_sample(f, q, omega, schwarz_poly_cap(omega, rho), dil, n_trunc);
    s.prov.seed = seed;
    return s;
}

HarmonicSample extremal_sample(const FunctionFamily& f, const QuasiParam& q, cplx lambda,
                               int n_trunc) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
        throw std::invalid_argument("extremal_sample: lambda must be unimodular");
    HarmonicSample s;
    s.family = f;
    s.dilatation_bound = q.k;
    s.prov.is_extremal = true;
    s.prov.lambda = lambda;
    s.h = extremal_series(f, n_trunc);
    s.g = scalar_multiply(q.k * lambda, s.h);
    if (q.k > 0.0)
        verify_sense_preserving(differentiate(s.h), differentiate(s.g), q.k,
                                0.5 * s.h.validity_radius);
    return s;
}

Certificate check_bohr(const HarmonicSample& s, const FunctionFamily& f, double r) {
    const auto mh = majorant_sum(s.h, r, 1);
    const auto mg = majorant_sum(s.g, r, 1);
    const double lhs = mh.value + mg.value;
    const double rhs = boundary_distance(f);
    const double slack =
        fp_sum_slack(s.h.degree() + s.g.degree() + 8, std::max({lhs, rhs, 1.0}));
    return Certificate::make(lhs, mh.tail + mg.tail + slack, rhs);
}

Certificate check_rogosinski(const HarmonicSample& s, const FunctionFamily& f, double r,
                             ThresholdForm form) {
    if (f.kind != FunctionFamily::Kind::concave_pole)
        throw CapabilityError("check_rogosinski: supported for concave families only");
    const auto mh = majorant_sum(s.h, r, 1);
    const auto mg = majorant_sum(s.g, r, 1);
    const double sup_h = boundary_max_abs(s.h, r, 4096);
    const double lhs = sup_h + mh.value + mg.value;
    const double d = boundary_distance(f);
    const double rhs = form == ThresholdForm::proof_form ? std::abs(s.h.coeff(0)) + d : d;
    const double slack =
        fp_sum_slack(2 * s.h.degree() + s.g.degree() + 8, std::max({lhs, rhs, 1.0}));
    return Certificate::make(lhs, 2.0 * mh.tail + mg.tail + slack, rhs);
}

EmpiricalRadius empirical_radius(const HarmonicSample& s, const FunctionFamily& f,
                                 InequalityKind kind) {
    auto check = [&](double r) {
        return kind.type == InequalityType::bohr ? check_bohr(s, f, r)
                                                 : check_rogosinski(s, f, r);
    };
    const double family_top = f.kind == FunctionFamily::Kind::concave_pole ? f.p : 1.0;
    const double top =
        std::min({family_top, s.h.validity_radius, s.g.validity_radius}) * (1.0 - 1e-9);

    EmpiricalRadius out;
    // Coarse downward scan for a violated witness; near a pole the
    // truncation tail dominates and the verdict is honestly inconclusive,
    // so the top point alone is not enough.
    double witness = -1.0;
    for (int i = 0; i < 64; ++i) {
        const double r = top * (64 - i) / 64.0;
        const auto v = check(r).verdict;
        if (v == Verdict::violated) {
            witness = r;
            break;
        }
        if (v == Verdict::inconclusive) ++out.inconclusive_hits;
        if (v == Verdict::holds) break; // margins only grow further down
    }
    if (witness < 0.0) {
        out.value = top;
        out.hit_bracket_top = true;
        return out;
    }
    double lo = 0.0, hi = witness;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        const auto v = check(mid).verdict;
        if (v == Verdict::holds) {
            lo = mid;
        } else {
            if (v == Verdict::inconclusive) ++out.inconclusive_hits;
            hi = mid;
        }
    }
    out.value = lo;
    return out;
}

Certificate lemma_tail_subordination(const TruncatedSeries& f, const TruncatedSeries& g,
                                     int from_n, double r) {
    if (from_n < 1) throw std::invalid_argument("lemma_tail_subordination: N must be >= 1");
    lemma_cap_check(r);
    const auto mf = majorant_sum(f, r, from_n);
    const auto mg = majorant_sum(g, r, from_n);
    const double slack =
        fp_sum_slack(f.degree() + g.degree() + 8, std::max({mf.value, mg.value, 1.0}));
    return Certificate::make(mf.value, mf.tail + mg.tail + slack, mg.value);
}

Certificate lemma_dilatation(const TruncatedSeries& h, const TruncatedSeries& g, double k,
                             double r) {
    if (!(k > 0.0) || k > 1.0)
        throw std::invalid_argument("lemma_dilatation: k must lie in (0,1]");
    lemma_cap_check(r);
    const auto mg = majorant_sum(g, r, 1);
    const auto mh = majorant_sum(h, r, 1);
    const double rhs = k * mh.value;
    const double slack =
        fp_sum_slack(h.degree() + g.degree() + 8, std::max({mg.value, rhs, 1.0}));
    return Certificate::make(mg.value, mg.tail + k * mh.tail + slack, rhs);
}

Certificate lemma_coefficient_domination(const TruncatedSeries& f, const FunctionFamily& family,
                                         double r) {
    if (family.kind != FunctionFamily::Kind::mm_convex)
        throw CapabilityError("lemma_coefficient_domination: stated for Ma-Minda convex families");
    lemma_cap_check(r);
    const auto mf = majorant_sum(f, r, 1);
    const double rhs = extremal_majorant(family, r);
    const double slack = fp_sum_slack(f.degree() + 8, std::max({mf.value, rhs, 1.0}));
    return Certificate::make(mf.value, mf.tail + slack, rhs);
}

Certificate lemma_growth(const TruncatedSeries& f, const FunctionFamily& family, double r) {
    if (!family.is_ma_minda())
        throw CapabilityError("lemma_growth: stated for Ma-Minda families");
    if (!(r > 0.0) || r >= 1.0) throw std::domain_error("lemma_growth: r must lie in (0,1)");

    double max_abs = 0.0, min_abs = kInf;
    for (int j = 0; j < 512; ++j) {
        const double v = std::abs(f.eval(std::polar(r, 2.0 * std::numbers::pi * j / 512.0)));
        max_abs = std::max(max_abs, v);
        min_abs = std::min(min_abs, v);
    }
    const double upper = extremal_point_value(family, r);
    const double lower = -extremal_point_value(family, -r);
    const double slack = fp_sum_slack(f.degree() + 8, std::max({max_abs, upper, 1.0}));
    const auto up = Certificate::make(max_abs, f.tail.at(r) + slack, upper);
    const auto low = Certificate::make(lower, f.tail.at(r) + slack, min_abs);
    return up.margin <= low.margin ? up : low;
}

Certificate lemma_check(LemmaId which, const LemmaInstance& inst, double r) {
    switch (which) {
        case LemmaId::lemma_2_1:
            return lemma_tail_subordination(inst.lhs_series, inst.rhs_series, inst.from_n, r);
        case LemmaId::lemma_2_2:
            return lemma_dilatation(inst.lhs_series, inst.rhs_series, inst.k, r);
        case LemmaId::lemma_3_5:
            return lemma_coefficient_domination(inst.lhs_series, inst.family, r);
        case LemmaId::growth_convex:
        case LemmaId::growth_starlike:
            return lemma_growth(inst.lhs_series, inst.family, r);
    }
    throw std::logic_error("lemma_check: unreachable");
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("BOHRLAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, static_cast<unsigned>(cap));
    }
    return static_cast<int>(hw);
}

EnsembleReport run_ensemble(const FunctionFamily& f, const QuasiParam& q, InequalityType kind,
                            int trials, std::uint64_t seed_base, double r, int n_trunc,
                            int n_threads) {
    if (trials < 1) throw std::invalid_argument("run_ensemble: trials must be >= 1");
    const int nw = std::min(n_threads > 0 ? n_threads : worker_count(), trials);

    struct Local {
        int holds = 0, violated = 0, inconclusive = 0;
        double min_margin = kInf;
        std::exception_ptr error;
    };
    std::vector<Local> locals(static_cast<size_t>(nw));
    auto work = [&](int w) {
        auto& loc = locals[static_cast<size_t>(w)];
        try {
            for (int i = w; i < trials; i += nw) {
                const std::uint64_t seed =
                    seed_base ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1));
                auto s = random_sample(f, q, seed, n_trunc);
                const Certificate c = kind == InequalityType::bohr
                                          ? check_bohr(s, f, r)
                                          : check_rogosinski(s, f, r);
                switch (c.verdict) {
                    case Verdict::holds: ++loc.holds; break;
                    case Verdict::violated: ++loc.violated; break;
                    case Verdict::inconclusive: ++loc.inconclusive; break;
                }
                loc.min_margin = std::min(loc.min_margin, c.margin);
            }
        } catch (...) {
            loc.error = std::current_exception();
        }
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nw));
        for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& loc : locals)
        if (loc.error) std::rethrow_exception(loc.error);

    EnsembleReport rep;
    rep.family = f;
    rep.K = q.K;
    rep.kind = kind;
    rep.r = r;
    rep.trials = trials;
    rep.seed_base = seed_base;
    rep.min_margin = kInf;
    for (const auto& loc : locals) {
        rep.holds += loc.holds;
        rep.violated += loc.violated;
        rep.inconclusive += loc.inconclusive;
        rep.min_margin = std::min(rep.min_margin, loc.min_margin);
    }
    return rep;
}

} // namespace bohrlab

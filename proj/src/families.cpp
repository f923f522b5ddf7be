#include "bohrlab/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace bohrlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log1p(x)/x, stable through x = 0.
double log1p_over(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x / 2.0 + x * x / 3.0 - x * x * x / 4.0;
    return std::log1p(x) / x;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Normalized Janowski parameters with removable-singularity routing.
struct JBranch {
    double A, B;
    bool a_zero, b_zero;
    std::string note;
};

JBranch classify(const MaMindaPhi& phi) {
    JBranch j{phi.ja(), phi.jb(), false, false, {}};
    if (std::abs(j.A) < 1e-9) {
        if (j.A != 0.0)
            j.note = "A = " + fmt(j.A) + " within 1e-9 of 0; using the logarithmic branch";
        if (phi.kind == MaMindaPhi::Kind::order_alpha && j.A != 0.0)
            j.note = "alpha within 1e-9 of 1/2; using the logarithmic branch";
        j.A = 0.0;
        j.a_zero = true;
    }
    if (std::abs(j.B) < 1e-9) {
        if (j.B != 0.0)
            j.note = "B = " + fmt(j.B) + " within 1e-9 of 0; using the exponential branch";
        j.B = 0.0;
        j.b_zero = true;
    }
    return j;
}

// Does the coefficient recurrence factor (A - nB) stay nonnegative for all n?
// For B <= 0 always; for B > 0 only when A/B is a positive integer (the
// series then terminates at the vanishing factor).
bool factors_nonnegative(const JBranch& j) {
    if (j.B <= 0.0) return true;
    const double m = j.A / j.B;
    return std::abs(m - std::round(m)) < 1e-12 && std::round(m) >= 1.0;
}

// Certified summation of sum |c_n| r^n (or its derivative series) for the
// Janowski recurrences; converges whenever max(|B|, ratio at the current
// index) * r < 1.  Used only for mixed-sign coefficients (B > 0).
double sum_abs_janowski(double A, double B, bool convex, double r, bool deriv) {
    if (r == 0.0) return deriv ? 1.0 : 0.0;
    double acc = 0.0;
    double c = 1.0;                    // signed coefficient, n = 1
    double rn = deriv ? 1.0 : r;       // r^{n-1} or r^n
    for (int n = 1; n <= 5'000'000; ++n) {
        acc += std::abs(c) * rn * (deriv ? n : 1.0);
        const double rho_n = std::abs(A - n * B) / (convex ? n + 1.0 : static_cast<double>(n));
        const double q = std::max(rho_n, std::abs(B)); // sup of the Moebius-monotone ratios
        const double x = q * r;
        if (x < 1.0) {
            const double s1 = x / (1.0 - x);
            double tail;
            if (!deriv) tail = std::abs(c) * rn * s1;
            else tail = std::abs(c) * rn * (n * s1 + x / ((1.0 - x) * (1.0 - x)));
            if (tail <= 1e-17 * acc + 1e-300) return acc;
        }
        c *= (A - n * B) / (convex ? n + 1.0 : static_cast<double>(n));
        rn *= r;
    }
    throw std::runtime_error("janowski majorant series failed to converge");
}

void require_extremal(const FunctionFamily& f, const char* what) {
    if (!f.has_extremal())
        throw CapabilityError(std::string(what) +
                              ": family '" + to_string(f) + "' has no extremal series in the catalog");
}

double concave_majorant(double p, double r) { return p * r / ((p - r) * (1.0 - p * r)); }

double concave_majorant_derivative(double p, double r) {
    const double d = (p - r) * (1.0 - p * r);
    return p * p * (1.0 - r * r) / (d * d);
}

void check_radius(const FunctionFamily& f, double r) {
    const double top = f.kind == FunctionFamily::Kind::concave_pole ? f.p : 1.0;
    if (!(r >= 0.0) || r >= top) {
        std::ostringstream os;
        os << "extremal majorant of '" << to_string(f) << "': radius " << r
           << " outside [0, " << top << ")";
        throw std::domain_error(os.str());
    }
}

} // namespace

QuasiParam QuasiParam::from_K(double K) {
    if (!(K >= 1.0) || !std::isfinite(K))
        throw std::invalid_argument("QuasiParam: K must be a finite real >= 1");
    return {K, (K - 1.0) / (K + 1.0)};
}

QuasiParam QuasiParam::from_k(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw std::invalid_argument("QuasiParam: k must lie in [0, 1)");
    return {(1.0 + k) / (1.0 - k), k};
}

MaMindaPhi MaMindaPhi::janowski(double A, double B) {
    if (!(B >= -1.0) || !(B < A) || !(A <= 1.0))
        throw std::invalid_argument("Janowski parameters require -1 <= B < A <= 1");
    MaMindaPhi p;
    p.kind = Kind::janowski;
    p.A = A;
    p.B = B;
    return p;
}

MaMindaPhi MaMindaPhi::order_alpha(double alpha) {
    if (!(alpha >= 0.0) || alpha >= 1.0)
        throw std::invalid_argument("order alpha requires 0 <= alpha < 1");
    MaMindaPhi p;
    p.kind = Kind::order_alpha;
    p.alpha = alpha;
    return p;
}

MaMindaPhi MaMindaPhi::classical() {
    MaMindaPhi p;
    p.kind = Kind::classical;
    return p;
}

double MaMindaPhi::ja() const {
    switch (kind) {
        case Kind::janowski: return A;
        case Kind::order_alpha: return 1.0 - 2.0 * alpha;
        case Kind::classical: return 1.0;
    }
    return 1.0;
}

double MaMindaPhi::jb() const {
    return kind == Kind::janowski ? B : -1.0;
}

FunctionFamily FunctionFamily::concave(double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("concave pole requires 0 < p < 1");
    FunctionFamily f;
    f.kind = Kind::concave_pole;
    f.p = p;
    return f;
}

FunctionFamily FunctionFamily::convex(MaMindaPhi phi) {
    FunctionFamily f;
    f.kind = Kind::mm_convex;
    f.phi = phi;
    return f;
}

FunctionFamily FunctionFamily::starlike(MaMindaPhi phi) {
    FunctionFamily f;
    f.kind = Kind::mm_starlike;
    f.phi = phi;
    return f;
}

FunctionFamily FunctionFamily::bounded() {
    FunctionFamily f;
    f.kind = Kind::bounded_analytic;
    return f;
}

FunctionFamily FunctionFamily::univalent() {
    FunctionFamily f;
    f.kind = Kind::univalent_baseline;
    return f;
}

double extremal_coeff_signed(const FunctionFamily& f, int n) {
    require_extremal(f, "extremal_coeff");
    if (n < 1) throw std::invalid_argument("extremal_coeff: n must be >= 1");
    if (f.kind == FunctionFamily::Kind::concave_pole) {
        const double p = f.p;
        return (1.0 - std::pow(p, 2 * n)) / ((1.0 - p * p) * std::pow(p, n - 1));
    }
    const auto j = classify(f.phi);
    const bool convex = f.kind == FunctionFamily::Kind::mm_convex;
    double c = 1.0;
    for (int m = 1; m < n; ++m) c *= (j.A - m * j.B) / (convex ? m + 1.0 : static_cast<double>(m));
    return c;
}

double extremal_coeff(const FunctionFamily& f, int n) {
    return std::abs(extremal_coeff_signed(f, n));
}

bool extremal_coeffs_nonnegative(const FunctionFamily& f) {
    require_extremal(f, "extremal_coeffs_nonnegative");
    if (f.kind == FunctionFamily::Kind::concave_pole) return true;
    return factors_nonnegative(classify(f.phi));
}

TruncatedSeries extremal_series(const FunctionFamily& f, int n_trunc) {
    require_extremal(f, "extremal_series");
    if (n_trunc < 1) throw std::invalid_argument("extremal_series: n_trunc must be >= 1");

    if (f.kind == FunctionFamily::Kind::concave_pole) {
        const double p = f.p;
        // cap the truncation where p^{-(n-1)} would overflow; the geometric
        // tail certificate covers the difference
        const int n_max = std::max(8, static_cast<int>(290.0 / std::log10(1.0 / p)));
        const int n_eff = std::min(n_trunc, n_max);
        std::vector<cplx> c(static_cast<size_t>(n_eff) + 1, cplx(0.0));
        double pn = 1.0;       // p^{n-1}
        double p2n = p * p;    // p^{2n}
        for (int n = 1; n <= n_eff; ++n) {
            c[static_cast<size_t>(n)] = (1.0 - p2n) / ((1.0 - p * p) * pn);
            pn *= p;
            p2n *= p * p;
        }
        TruncatedSeries s(std::move(c), p);
        const double coef = p / (1.0 - p * p); // |c_n| <= coef * (1/p)^n
        s.tail = TailBound::geometric(0.0, 0.0, n_eff);
        s.tail.fn = [coef, p, n_eff](double r) {
            const double x = r / p;
            if (x >= 1.0) return kInf;
            return coef * std::pow(x, n_eff + 1) / (1.0 - x);
        };
        return s;
    }

    const auto j = classify(f.phi);
    const bool convex = f.kind == FunctionFamily::Kind::mm_convex;
    std::vector<cplx> c(static_cast<size_t>(n_trunc) + 1, cplx(0.0));
    double cn = 1.0;
    for (int n = 1; n <= n_trunc; ++n) {
        c[static_cast<size_t>(n)] = cn;
        cn *= (j.A - n * j.B) / (convex ? n + 1.0 : static_cast<double>(n));
    }
    const double c_last = std::abs(c[static_cast<size_t>(n_trunc)]);
    TruncatedSeries s(std::move(c), 1.0);
    s.tail.kind = TailBound::Kind::geometric_ratio;
    if (convex) {
        // ratio |A-nB|/(n+1) is Moebius-monotone in n with limit |B|; both
        // stay <= max(|A|,|B|) <= 1
        const double rho_n = std::abs(j.A - n_trunc * j.B) / (n_trunc + 1.0);
        const double q = std::min(1.0, std::max(rho_n, std::abs(j.B)));
        s.tail.fn = [c_last, q, n_trunc](double r) {
            const double x = q * r;
            if (x >= 1.0) return kInf;
            return c_last * std::pow(r, n_trunc) * x / (1.0 - x);
        };
    } else {
        // |d_{N+j}| <= |d_N| ((N+j)/N) m^j with m = max(|A|,|B|)
        const double m = std::max(std::abs(j.A), std::abs(j.B));
        s.tail.fn = [c_last, m, n_trunc](double r) {
            const double x = std::max(m, 1e-30) * r;
            if (x >= 1.0) return kInf;
            const double s1 = x / (1.0 - x);
            return c_last * std::pow(r, n_trunc) * (s1 + s1 / (static_cast<double>(n_trunc) * (1.0 - x)));
        };
    }
    return s;
}

double extremal_majorant(const FunctionFamily& f, double r) {
    require_extremal(f, "extremal_majorant");
    check_radius(f, r);
    if (f.kind == FunctionFamily::Kind::concave_pole) return concave_majorant(f.p, r);

    const auto j = classify(f.phi);
    const bool convex = f.kind == FunctionFamily::Kind::mm_convex;
    if (convex) {
        if (j.b_zero) return j.a_zero ? r : std::expm1(j.A * r) / j.A;
        if (j.a_zero) return -std::log1p(-std::abs(j.B) * r) / std::abs(j.B);
        if (factors_nonnegative(j)) {
            const double t = j.A * r * log1p_over(j.B * r); // (A/B) log(1+Br)
            return std::expm1(t) / j.A;
        }
        return sum_abs_janowski(j.A, j.B, true, r, false);
    }
    if (j.b_zero) return r * std::exp(j.A * r);
    if (j.a_zero) return r / (1.0 - std::abs(j.B) * r);
    if (factors_nonnegative(j)) {
        const double t = (j.A - j.B) * r * log1p_over(j.B * r); // ((A-B)/B) log(1+Br)
        return r * std::exp(t);
    }
    return sum_abs_janowski(j.A, j.B, false, r, false);
}

double extremal_majorant_derivative(const FunctionFamily& f, double r) {
    require_extremal(f, "extremal_majorant_derivative");
    check_radius(f, r);
    if (f.kind == FunctionFamily::Kind::concave_pole) return concave_majorant_derivative(f.p, r);

    const auto j = classify(f.phi);
    const bool convex = f.kind == FunctionFamily::Kind::mm_convex;
    if (convex) {
        if (j.b_zero) return std::exp(j.A * r);
        if (j.a_zero) return 1.0 / (1.0 - std::abs(j.B) * r);
        if (factors_nonnegative(j)) {
            const double t = (j.A - j.B) * r * log1p_over(j.B * r);
            return std::exp(t); // (1+Br)^{(A-B)/B}
        }
        return sum_abs_janowski(j.A, j.B, true, r, true);
    }
    if (j.b_zero) return (1.0 + j.A * r) * std::exp(j.A * r);
    if (j.a_zero) {
        const double d = 1.0 - std::abs(j.B) * r;
        return 1.0 / (d * d);
    }
    if (factors_nonnegative(j)) {
        const double t = (j.A - 2.0 * j.B) * r * log1p_over(j.B * r); // ((A-B)/B - 1) log(1+Br)
        return std::exp(t) * (1.0 + j.A * r);
    }
    return sum_abs_janowski(j.A, j.B, false, r, true);
}

double extremal_point_value(const FunctionFamily& f, double x) {
    require_extremal(f, "extremal_point_value");
    const double top = f.kind == FunctionFamily::Kind::concave_pole ? f.p : 1.0;
    if (!(std::abs(x) < top))
        throw std::domain_error("extremal_point_value: |x| outside the validity disk");
    if (f.kind == FunctionFamily::Kind::concave_pole)
        return f.p * x / ((f.p - x) * (1.0 - f.p * x));
    const auto j = classify(f.phi);
    if (f.kind == FunctionFamily::Kind::mm_convex) {
        if (j.b_zero) return j.a_zero ? x : std::expm1(j.A * x) / j.A;
        if (j.a_zero) return x * log1p_over(j.B * x); // log(1+Bx)/B
        return std::expm1(j.A * x * log1p_over(j.B * x)) / j.A;
    }
    if (j.b_zero) return x * std::exp(j.A * x);
    return x * std::exp((j.A - j.B) * x * log1p_over(j.B * x));
}

double boundary_distance(const FunctionFamily& f) {
    require_extremal(f, "boundary_distance");
    if (f.kind == FunctionFamily::Kind::concave_pole)
        return f.p / ((1.0 + f.p) * (1.0 + f.p));
    const auto j = classify(f.phi);
    if (f.kind == FunctionFamily::Kind::mm_convex) {
        // -k_phi(-1)
        if (j.b_zero) return j.a_zero ? 1.0 : -std::expm1(-j.A) / j.A;
        if (j.a_zero) return -std::log1p(-j.B) / j.B; // -log(1-B)/B, B < 0 here
        const double t = -j.A * log1p_over(-j.B);    // (A/B) log(1-B)
        return -std::expm1(t) / j.A;
    }
    // -h_phi(-1)
    if (j.b_zero) return std::exp(-j.A);
    const double t = -(j.A - j.B) * log1p_over(-j.B); // ((A-B)/B) log(1-B)
    return std::exp(t);
}

double majorant_limit_at_one(const FunctionFamily& f) {
    require_extremal(f, "majorant_limit_at_one");
    if (f.kind == FunctionFamily::Kind::concave_pole) return kInf;
    const auto j = classify(f.phi);
    const bool convex = f.kind == FunctionFamily::Kind::mm_convex;
    const double babs = std::abs(j.B);
    if (convex) {
        if (j.b_zero) return j.a_zero ? 1.0 : std::expm1(j.A) / j.A;
        if (babs < 1.0) {
            if (j.a_zero) return -std::log1p(-babs) / babs;
            if (factors_nonnegative(j)) {
                const double t = j.A * log1p_over(j.B); // (A/B) log(1+B)
                return std::expm1(t) / j.A;
            }
            return sum_abs_janowski(j.A, j.B, true, 1.0, false);
        }
        // B = -1: coefficients ~ n^{A-1}; absolutely convergent iff A < 0
        if (j.A < 0.0) return -1.0 / j.A;
        return kInf;
    }
    if (j.b_zero) return std::exp(j.A);
    if (babs < 1.0) {
        if (j.a_zero) return 1.0 / (1.0 - babs);
        if (factors_nonnegative(j)) {
            const double t = (j.A - j.B) * log1p_over(j.B);
            return std::exp(t);
        }
        return sum_abs_janowski(j.A, j.B, false, 1.0, false);
    }
    return kInf; // B = -1: coefficients ~ n^A with A > -1
}

BohrObjective bohr_objective(const FunctionFamily& f, const QuasiParam& q, InequalityKind kind) {
    if (!f.has_extremal())
        throw CapabilityError("bohr_objective: '" + to_string(f) +
                              "' is a baseline family; use baseline_radius");
    if (kind.type == InequalityType::bohr_rogosinski &&
        f.kind != FunctionFamily::Kind::concave_pole)
        throw CapabilityError("bohr_objective: the Bohr-Rogosinski objective exists only for "
                              "concave families in the catalog");

    BohrObjective obj;
    const double factor =
        kind.type == InequalityType::bohr ? q.k_plus_1() : q.k_plus_2();
    const double d = boundary_distance(f);
    const FunctionFamily fam = f;
    obj.g = [fam, factor, d](double r) { return factor * extremal_majorant(fam, r) - d; };
    obj.dg = [fam, factor](double r) { return factor * extremal_majorant_derivative(fam, r); };
    obj.bracket_lo = 0.0;
    if (f.kind == FunctionFamily::Kind::concave_pole) {
        obj.bracket_hi = f.p * (1.0 - 1e-12);
        obj.limit_at_one = kInf;
        obj.case_one = false;
    } else {
        obj.bracket_hi = 1.0 - 1e-12;
        const double lim = majorant_limit_at_one(f);
        obj.limit_at_one = std::isinf(lim) ? kInf : factor * lim - d;
        obj.case_one = std::isfinite(obj.limit_at_one) && std::abs(obj.limit_at_one) <= 1e-10;
        obj.note = classify(f.phi).note;
    }
    return obj;
}

TruncatedSeries subordinate_series(const FunctionFamily& f, const TruncatedSeries& omega,
                                   int n_trunc, double omega_cap) {
    require_extremal(f, "subordinate_series");
    if (std::abs(omega.coeff(0)) != 0.0)
        throw std::invalid_argument("subordinate_series: omega must vanish at 0");
    if (!(omega_cap >= 0.0))
        throw std::invalid_argument("subordinate_series: omega_cap must be certified nonnegative");
    const double v_out = f.kind == FunctionFamily::Kind::concave_pole ? f.p : 1.0;
    if (omega_cap >= v_out)
        throw CompositionDomainError("subordinate_series: omega sup-norm " + fmt(omega_cap) +
                                     " reaches the extremal singularity at " + fmt(v_out));

    TruncatedSeries w = omega;
    w.coeffs.resize(static_cast<size_t>(n_trunc) + 1, cplx(0.0));
    TruncatedSeries h;

    if (f.kind == FunctionFamily::Kind::concave_pole) {
        const double p = f.p;
        // k_p(w) = p w / ((p - w)(1 - p w))
        TruncatedSeries d1 = scalar_multiply(-1.0, w);
        d1.coeffs[0] = p;
        TruncatedSeries d2 = scalar_multiply(-p, w);
        d2.coeffs[0] = 1.0;
        auto den = cauchy_product(d1, d2, n_trunc);
        den.tail = TailBound::zero();
        h = divide(scalar_multiply(p, w), den, n_trunc);
    } else {
        const auto j = classify(f.phi);
        const bool convex = f.kind == FunctionFamily::Kind::mm_convex;
        if (convex) {
            // h' = k_phi'(w) w' with k_phi' = (1+Bw)^{(A-B)/B} (or e^{Aw})
            TruncatedSeries kprime;
            if (j.b_zero) {
                kprime = exp_series(scalar_multiply(j.A, w), n_trunc);
            } else {
                TruncatedSeries u = scalar_multiply(j.B, w);
                u.coeffs[0] = 1.0;
                kprime = pow_series(u, (j.A - j.B) / j.B, n_trunc);
            }
            h = integrate_from_zero(cauchy_product(kprime, differentiate(w), n_trunc - 1));
            h.coeffs.resize(static_cast<size_t>(n_trunc) + 1, cplx(0.0));
        } else {
            // h = w (1+Bw)^{(A-B)/B} (or w e^{Aw})
            TruncatedSeries factor;
            if (j.b_zero) {
                factor = exp_series(scalar_multiply(j.A, w), n_trunc);
            } else {
                TruncatedSeries u = scalar_multiply(j.B, w);
                u.coeffs[0] = 1.0;
                factor = pow_series(u, (j.A - j.B) / j.B, n_trunc);
            }
            h = cauchy_product(w, factor, n_trunc);
        }
    }

    // Cauchy tail on |z| = t with the image radius held at the midpoint
    // between the omega cap and the extremal singularity.
    const double v_in = omega.validity_radius;
    double t = v_in * (1.0 - 1e-9);
    if (omega_cap > 0.0) t = std::min(t, v_in * (omega_cap + v_out) / (2.0 * omega_cap));
    const double s_img = omega_cap > 0.0 ? omega_cap * t / v_in : 0.0;
    const double sup_comp = extremal_majorant(f, s_img);
    h.validity_radius = t;
    h.tail = TailBound::cauchy(sup_comp, t, n_trunc);
    return h;
}

namespace {

double parse_real_token(std::string_view tok, const char* what) {
    double out = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last)
        throw ParseError(std::string("expected a real number for ") + what + ", got '" +
                             std::string(tok) + "'",
                         std::string(tok));
    return out;
}

std::string_view expect_prefix(std::string_view s, std::string_view prefix, const char* what) {
    if (s.substr(0, prefix.size()) != prefix)
        throw ParseError(std::string("expected '") + std::string(prefix) + "' in " + what +
                             ", got '" + std::string(s) + "'",
                         std::string(s));
    return s.substr(prefix.size());
}

MaMindaPhi parse_phi(std::string_view rest, std::string_view whole) {
    if (rest == "classical") return MaMindaPhi::classical();
    if (rest.substr(0, 6) == "alpha=") {
        const double a = parse_real_token(rest.substr(6), "alpha");
        if (!(a >= 0.0) || a >= 1.0) throw ParseError("alpha out of [0,1)", std::string(rest));
        return MaMindaPhi::order_alpha(a);
    }
    if (rest.substr(0, 9) == "janowski:") {
        auto params = rest.substr(9);
        const auto comma = params.find(',');
        if (comma == std::string_view::npos)
            throw ParseError("janowski spec needs 'A=<real>,B=<real>'", std::string(params));
        const double A = parse_real_token(expect_prefix(params.substr(0, comma), "A=", "janowski"), "A");
        const double B = parse_real_token(expect_prefix(params.substr(comma + 1), "B=", "janowski"), "B");
        if (!(B >= -1.0) || !(B < A) || !(A <= 1.0))
            throw ParseError("janowski parameters require -1 <= B < A <= 1",
                             std::string(params));
        return MaMindaPhi::janowski(A, B);
    }
    throw ParseError("unknown Ma-Minda variant '" + std::string(rest) + "' in '" +
                         std::string(whole) + "'",
                     std::string(rest));
}

} // namespace

FunctionFamily parse_family(std::string_view spec) {
    if (spec == "bounded") return FunctionFamily::bounded();
    if (spec == "univalent") return FunctionFamily::univalent();
    if (spec.substr(0, 8) == "concave:") {
        auto rest = expect_prefix(spec.substr(8), "p=", "concave spec");
        const double p = parse_real_token(rest, "p");
        if (!(p > 0.0) || !(p < 1.0)) throw ParseError("p out of (0,1)", std::string(rest));
        return FunctionFamily::concave(p);
    }
    if (spec.substr(0, 7) == "convex:")
        return FunctionFamily::convex(parse_phi(spec.substr(7), spec));
    if (spec.substr(0, 9) == "starlike:")
        return FunctionFamily::starlike(parse_phi(spec.substr(9), spec));
    throw ParseError("unknown family spec '" + std::string(spec) + "'", std::string(spec));
}

std::string to_string(const FunctionFamily& f) {
    switch (f.kind) {
        case FunctionFamily::Kind::bounded_analytic: return "bounded";
        case FunctionFamily::Kind::univalent_baseline: return "univalent";
        case FunctionFamily::Kind::concave_pole: return "concave:p=" + fmt(f.p);
        case FunctionFamily::Kind::mm_convex:
        case FunctionFamily::Kind::mm_starlike: {
            std::string head = f.kind == FunctionFamily::Kind::mm_convex ? "convex:" : "starlike:";
            switch (f.phi.kind) {
                case MaMindaPhi::Kind::classical: return head + "classical";
                case MaMindaPhi::Kind::order_alpha: return head + "alpha=" + fmt(f.phi.alpha);
                case MaMindaPhi::Kind::janowski:
                    return head + "janowski:A=" + fmt(f.phi.A) + ",B=" + fmt(f.phi.B);
            }
        }
    }
    return "?";
}

std::string to_string(InequalityType t) {
    return t == InequalityType::bohr ? "bohr" : "rogosinski";
}

} // namespace bohrlab

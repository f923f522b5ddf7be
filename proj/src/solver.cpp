#include "bohrlab/solver.hpp"

#include <cmath>
#include <sstream>

namespace bohrlab {

namespace {

constexpr double kOneThird = 1.0 / 3.0;

// Positive when the objective blows up inside the bracket (pole side).
double signed_value(double v) { return std::isnan(v) ? 0.0 : v; }

bool is_classical(const MaMindaPhi& phi) { return phi.ja() == 1.0 && phi.jb() == -1.0; }

double concave_quadratic_root(double p, double factor) {
    // p r^2 - [(1+p^2) + factor (1+p)^2] r + p = 0, smaller root; the two
    // roots multiply to 1, so the stable form divides out the larger one.
    const double b = (1.0 + p * p) + factor * (1.0 + p) * (1.0 + p);
    return 2.0 * p / (b + std::sqrt(b * b - 4.0 * p * p));
}

} // namespace

std::string to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::closed_form: return "closed_form";
        case SolveMethod::bisection: return "bisection";
        case SolveMethod::newton_safeguarded: return "newton_safeguarded";
        case SolveMethod::case_one_third: return "case_one_third";
    }
    return "?";
}

RootFindResult find_root_increasing(const std::function<double(double)>& g,
                                    const std::function<double(double)>& dg, double lo,
                                    double hi) {
    double flo = signed_value(g(lo));
    double fhi = g(hi);
    if (std::isnan(fhi)) fhi = std::numeric_limits<double>::infinity();
    if (!(flo < 0.0) || !(fhi > 0.0))
        throw SolverError("find_root_increasing: no sign change over the bracket", lo, hi, flo,
                          fhi);
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = g(mid);
        if (std::isnan(fm) || std::isinf(fm)) fm = fm > 0 || std::isnan(fm) ? 1.0 : -1.0;
        if (fm < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    double fx = g(x);
    bool polished = false;
    for (int step = 0; step < 2; ++step) {
        const double d = dg(x);
        if (!(d > 0.0) || !std::isfinite(d) || !std::isfinite(fx)) break;
        const double xn = x - fx / d;
        if (!(xn > lo) || !(xn < hi)) break; // Newton left the bracket
        const double fn = g(xn);
        if (!std::isfinite(fn) || std::abs(fn) > std::abs(fx)) break;
        x = xn;
        fx = fn;
        polished = true;
    }
    return {x, std::abs(fx), polished ? SolveMethod::newton_safeguarded : SolveMethod::bisection};
}

std::optional<double> closed_form_radius(const RadiusQuery& q) {
    const auto& f = q.family;
    if (f.kind == FunctionFamily::Kind::concave_pole) {
        const double factor = q.kind.type == InequalityType::bohr ? q.quasi.k_plus_1()
                                                                  : q.quasi.k_plus_2();
        return concave_quadratic_root(f.p, factor);
    }
    if (q.kind.type != InequalityType::bohr || !f.is_ma_minda()) return std::nullopt;
    if (!is_classical(f.phi)) return std::nullopt;
    const double K = q.quasi.K;
    if (f.kind == FunctionFamily::Kind::mm_convex) return (K + 1.0) / (5.0 * K + 1.0);
    return (5.0 * K + 1.0 - 2.0 * std::sqrt(6.0 * K * K + 2.0 * K)) / (K + 1.0);
}

RadiusResult solve_radius(const RadiusQuery& q) {
    const auto& f = q.family;

    if (f.kind == FunctionFamily::Kind::bounded_analytic) {
        if (q.kind.type == InequalityType::bohr)
            return baseline_radius({BaselineType::bohr_classic, 1}, q.quasi);
        return baseline_radius({BaselineType::rogosinski_n, q.kind.n}, q.quasi);
    }
    if (f.kind == FunctionFamily::Kind::univalent_baseline) {
        if (q.kind.type == InequalityType::bohr)
            return baseline_radius({BaselineType::univalent_subordination, 1}, q.quasi);
        throw CapabilityError("solve_radius: no Bohr-Rogosinski baseline for the univalent class");
    }

    const auto obj = bohr_objective(f, q.quasi, q.kind);
    RadiusResult res;
    res.bracket_lo = obj.bracket_lo;
    res.bracket_hi = obj.bracket_hi;
    res.note = obj.note;

    if (f.kind == FunctionFamily::Kind::concave_pole) {
        const double cf = *closed_form_radius(q);
        const auto it = find_root_increasing(obj.g, obj.dg, obj.bracket_lo, obj.bracket_hi);
        if (std::abs(cf - it.root) > 1e-10) {
            std::ostringstream os;
            os << "solve_radius: concave closed form " << cf << " disagrees with the bracketed root "
               << it.root << " (catalog bug)";
            throw SolverError(os.str(), obj.bracket_lo, obj.bracket_hi, cf, it.root);
        }
        res.value = cf;
        res.unclamped_root = cf;
        res.residual = std::abs(obj.g(cf));
        res.method = SolveMethod::closed_form;
        res.sharp = true;
        res.sharp_reason = "extremal with dilatation k*lambda attains equality beyond the radius";
        return res;
    }

    // Ma-Minda branch logic
    if (obj.case_one) {
        res.value = kOneThird;
        res.unclamped_root = kOneThird;
        res.residual = 0.0;
        res.method = SolveMethod::case_one_third;
        res.sharp = false;
        res.sharp_reason = "vanishing limit case: one-third bound, sharpness not asserted";
        return res;
    }

    double root;
    SolveMethod method;
    const auto cf = closed_form_radius(q);
    if (cf) {
        const auto it = find_root_increasing(obj.g, obj.dg, obj.bracket_lo, obj.bracket_hi);
        if (std::abs(*cf - it.root) > 1e-10) {
            std::ostringstream os;
            os << "solve_radius: closed form " << *cf << " disagrees with the bracketed root "
               << it.root << " (catalog bug)";
            throw SolverError(os.str(), obj.bracket_lo, obj.bracket_hi, *cf, it.root);
        }
        root = *cf;
        method = SolveMethod::closed_form;
    } else {
        const auto it = find_root_increasing(obj.g, obj.dg, obj.bracket_lo, obj.bracket_hi);
        root = it.root;
        method = it.method;
    }

    res.unclamped_root = root;
    res.residual = std::abs(obj.g(root));
    res.method = method;
    const bool coeffs_ok = extremal_coeffs_nonnegative(f);
    if (root > kOneThird + 1e-12) {
        res.value = kOneThird;
        res.clamped_at_one_third = true;
        res.sharp = false;
        res.sharp_reason = "root exceeds 1/3; the one-third bound is not attained";
    } else {
        res.value = std::min(root, kOneThird);
        res.clamped_at_one_third = false;
        res.sharp = coeffs_ok;
        res.sharp_reason = coeffs_ok
                               ? "root at most 1/3 with nonnegative extremal coefficients"
                               : "mixed-sign extremal coefficients; sharpness not asserted";
    }
    return res;
}

RadiusResult baseline_radius(BaselineKind which, const QuasiParam& q) {
    RadiusResult res;
    res.bracket_lo = 0.0;
    res.bracket_hi = 1.0;
    switch (which.type) {
        case BaselineType::bohr_classic:
            res.value = kOneThird;
            res.unclamped_root = kOneThird;
            res.method = SolveMethod::closed_form;
            res.sharp = true;
            res.sharp_reason = "Moebius extremal exceeds the bound beyond 1/3";
            return res;
        case BaselineType::convex_subordination:
            res.value = (q.K + 1.0) / (5.0 * q.K + 1.0);
            res.unclamped_root = res.value;
            res.method = SolveMethod::closed_form;
            res.sharp = true;
            res.sharp_reason = "half-plane extremal attains equality";
            return res;
        case BaselineType::rogosinski_n: {
            const int n = which.n;
            if (n < 1) throw std::invalid_argument("baseline_radius: Rogosinski index must be >= 1");
            auto g = [n](double r) {
                return 2.0 * (1.0 + r) * std::pow(r, n) - (1.0 - r) * (1.0 - r);
            };
            auto dg = [n](double r) {
                return 2.0 * std::pow(r, n) + 2.0 * n * (1.0 + r) * std::pow(r, n - 1) +
                       2.0 * (1.0 - r);
            };
            const auto it = find_root_increasing(g, dg, 0.0, 1.0);
            res.value = it.root;
            res.unclamped_root = it.root;
            res.residual = it.residual;
            res.method = it.method;
            res.sharp = true;
            res.sharp_reason = "partial-sum extremal attains equality";
            return res;
        }
        case BaselineType::univalent_subordination: {
            const double k = q.k;
            auto g = [k](double r) {
                return 4.0 * r * (1.0 + k * std::sqrt(1.0 + r)) - (1.0 - r) * (1.0 - r);
            };
            auto dg = [k](double r) {
                return 4.0 * (1.0 + k * std::sqrt(1.0 + r)) + 2.0 * r * k / std::sqrt(1.0 + r) +
                       2.0 * (1.0 - r);
            };
            const auto it = find_root_increasing(g, dg, 0.0, 1.0);
            res.value = it.root;
            res.unclamped_root = it.root;
            res.residual = it.residual;
            res.method = it.method;
            res.sharp = false;
            res.sharp_reason = "sharpness not asserted for this baseline";
            return res;
        }
    }
    throw std::logic_error("baseline_radius: unreachable");
}

} // namespace bohrlab

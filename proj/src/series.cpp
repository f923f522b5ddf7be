#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bohrlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sum_{n>N} x^n, exact closed form; +inf for x >= 1.
double geom_tail(double x, int trunc_n) {
    if (x < 0.0) return kInf;
    if (x >= 1.0) return kInf;
    return std::pow(x, trunc_n + 1) / (1.0 - x);
}

// sup over integer n > N of n * q^n, q in (0,1).
double sup_n_qn(double q, int trunc_n) {
    if (q <= 0.0) return 0.0;
    if (q >= 1.0) return kInf;
    const double n_star = -1.0 / std::log(q);
    const double n0 = trunc_n + 1;
    if (n0 >= n_star) return n0 * std::pow(q, n0);
    return 1.0 / (std::numbers::e * std::log(1.0 / q)); // real-valued max dominates
}

} // namespace

TailBound TailBound::geometric(double coef, double ratio, int trunc_n) {
    TailBound t;
    t.kind = Kind::geometric_ratio;
    t.fn = [coef, ratio, trunc_n](double r) { return coef * geom_tail(ratio * r, trunc_n); };
    return t;
}

TailBound TailBound::cauchy(double sup_bound, double rho, int trunc_n) {
    TailBound t;
    t.kind = Kind::cauchy_estimate;
    t.fn = [sup_bound, rho, trunc_n](double r) { return sup_bound * geom_tail(r / rho, trunc_n); };
    return t;
}

TailBound TailBound::heuristic(std::function<double(double)> fn) {
    TailBound t;
    t.kind = Kind::heuristic;
    t.fn = std::move(fn);
    return t;
}

TruncatedSeries::TruncatedSeries(std::vector<cplx> c, double validity, TailBound t)
    : coeffs(std::move(c)), validity_radius(validity), tail(std::move(t)) {
    if (coeffs.empty()) coeffs.assign(1, cplx(0.0));
    if (!(validity_radius > 0.0))
        throw std::invalid_argument("TruncatedSeries: validity radius must be positive");
}

TruncatedSeries TruncatedSeries::from_real(const std::vector<double>& c, double validity,
                                           TailBound t) {
    std::vector<cplx> cc(c.begin(), c.end());
    return TruncatedSeries(std::move(cc), validity, std::move(t));
}

cplx TruncatedSeries::eval(cplx z) const {
    cplx acc(0.0);
    for (int n = degree(); n >= 0; --n) acc = acc * z + coeffs[static_cast<size_t>(n)];
    return acc;
}

MajorantSum majorant_sum(const TruncatedSeries& s, double r, int from_index) {
    if (!(r >= 0.0) || r >= s.validity_radius) {
        std::ostringstream os;
        os << "majorant_sum: radius " << r << " is outside the validity disk of radius "
           << s.validity_radius;
        throw std::domain_error(os.str());
    }
    const int n = s.degree();
    if (from_index < 0 || from_index > n + 1)
        throw std::invalid_argument("majorant_sum: from_index out of range [0, N+1]");
    double acc = 0.0;
    for (int i = n; i >= from_index; --i) acc = acc * r + std::abs(s.coeffs[static_cast<size_t>(i)]);
    acc *= std::pow(r, from_index);
    return {acc, s.tail.at(r)};
}

TruncatedSeries scalar_multiply(cplx c, const TruncatedSeries& s) {
    TruncatedSeries out = s;
    for (auto& a : out.coeffs) a *= c;
    const double mag = std::abs(c);
    if (s.tail.fn) {
        auto parent = s.tail.fn;
        out.tail.fn = [parent, mag](double r) { return mag * parent(r); };
    }
    return out;
}

TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b, int n_out) {
    if (n_out < 0) throw std::invalid_argument("cauchy_product: negative truncation order");
    const int da = a.degree(), db = b.degree();
    std::vector<cplx> c(static_cast<size_t>(n_out) + 1, cplx(0.0));
    for (int n = 0; n <= n_out; ++n) {
        const int jlo = std::max(0, n - db), jhi = std::min(n, da);
        cplx acc(0.0);
        for (int j = jlo; j <= jhi; ++j)
            acc += a.coeffs[static_cast<size_t>(j)] * b.coeffs[static_cast<size_t>(n - j)];
        c[static_cast<size_t>(n)] = acc;
    }
    const double validity = std::min(a.validity_radius, b.validity_radius);
    TruncatedSeries out(std::move(c), validity);

    const bool exact = a.tail.kind == TailBound::Kind::zero && b.tail.kind == TailBound::Kind::zero &&
                       da + db <= n_out;
    if (exact) return out;

    // Dropped terms: cross tail products plus the polynomial convolution
    // beyond n_out, the latter pushed to a nearby circle rho > r.
    TruncatedSeries pa = a, pb = b; // polynomial parts, captured by value
    pa.tail = TailBound::zero();
    pb.tail = TailBound::zero();
    auto ta = a.tail, tb = b.tail;
    out.tail.kind = TailBound::Kind::cauchy_estimate;
    if (!ta.rigorous() || !tb.rigorous()) out.tail.kind = TailBound::Kind::heuristic;
    out.tail.fn = [pa, pb, ta, tb, validity, n_out](double r) {
        if (r >= validity) return kInf;
        const double Mar = majorant_sum(pa, r).value, Mbr = majorant_sum(pb, r).value;
        const double tar = ta.at(r), tbr = tb.at(r);
        const double rho = 0.5 * (r + validity);
        double dropped = 0.0;
        if (pa.degree() + pb.degree() > n_out) {
            const double Marho = majorant_sum(pa, rho).value, Mbrho = majorant_sum(pb, rho).value;
            dropped = std::pow(r / rho, n_out + 1) * Marho * Mbrho;
        }
        return Mar * tbr + tar * Mbr + tar * tbr + dropped;
    };
    return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner, int n_out,
                        double inner_cap) {
    if (n_out < 0) throw std::invalid_argument("compose: negative truncation order");
    if (std::abs(inner.coeff(0)) != 0.0)
        throw std::invalid_argument("compose: inner constant term must vanish (Schwarz condition)");

    const bool cap_certified = inner_cap >= 0.0;
    const double cap = cap_certified ? inner_cap : sup_norm_estimate(inner);
    if (cap >= outer.validity_radius) {
        std::ostringstream os;
        os << "compose: inner sup-norm bound " << cap << " reaches outside the outer validity disk "
           << outer.validity_radius;
        throw CompositionDomainError(os.str());
    }

    // Truncated Horner on the outer coefficients.
    std::vector<cplx> res(static_cast<size_t>(n_out) + 1, cplx(0.0));
    std::vector<cplx> tmp(static_cast<size_t>(n_out) + 1, cplx(0.0));
    const int m = outer.degree();
    const int di = inner.degree();
    res[0] = outer.coeff(m);
    int deg_res = 0;
    for (int k = m - 1; k >= 0; --k) {
        // tmp = res * inner, truncated
        const int deg_new = std::min(n_out, deg_res + di);
        std::fill(tmp.begin(), tmp.begin() + deg_new + 1, cplx(0.0));
        for (int i = 0; i <= deg_res; ++i) {
            const cplx ri = res[static_cast<size_t>(i)];
            if (ri == cplx(0.0)) continue;
            const int jmax = std::min(di, deg_new - i);
            for (int j = 0; j <= jmax; ++j)
                tmp[static_cast<size_t>(i + j)] += ri * inner.coeffs[static_cast<size_t>(j)];
        }
        tmp[0] += outer.coeff(k);
        std::swap(res, tmp);
        deg_res = deg_new;
    }
    res.resize(static_cast<size_t>(n_out) + 1, cplx(0.0));

    // Cauchy tail: on |z| = t the composition is bounded by the outer
    // majorant at s = cap * t / V_inner (Schwarz), with s held at the
    // midpoint between cap and the outer validity radius.
    const double v_in = inner.validity_radius;
    const double v_out = outer.validity_radius;
    double t = v_in * (1.0 - 1e-9);
    if (cap > 0.0) t = std::min(t, v_in * (cap + v_out) / (2.0 * cap));
    const double s_img = cap > 0.0 ? cap * t / v_in : 0.0;
    const auto ms = majorant_sum(outer, s_img);
    const double sup_comp = ms.value + ms.tail;

    TruncatedSeries out(std::move(res), t);
    out.tail = TailBound::cauchy(sup_comp, t, n_out);
    if (!cap_certified || !outer.tail.rigorous() || !inner.tail.rigorous())
        out.tail.kind = TailBound::Kind::heuristic;
    return out;
}

TruncatedSeries differentiate(const TruncatedSeries& s) {
    const int n = s.degree();
    std::vector<cplx> c(static_cast<size_t>(std::max(1, n)), cplx(0.0));
    for (int i = 1; i <= n; ++i)
        c[static_cast<size_t>(i - 1)] = static_cast<double>(i) * s.coeffs[static_cast<size_t>(i)];
    TruncatedSeries out(std::move(c), s.validity_radius);
    if (s.tail.fn) {
        auto parent = s.tail;
        const double validity = s.validity_radius;
        const int trunc_n = n;
        out.tail.kind = parent.kind == TailBound::Kind::zero ? TailBound::Kind::zero
                                                             : TailBound::Kind::cauchy_estimate;
        if (!parent.rigorous()) out.tail.kind = TailBound::Kind::heuristic;
        out.tail.fn = [parent, validity, trunc_n](double r) {
            if (r == 0.0) return 0.0;
            if (r >= validity) return kInf;
            double best = kInf;
            for (double frac : {0.5, 0.9}) {
                const double rho = r + frac * (validity - r);
                const double bound = sup_n_qn(r / rho, trunc_n) * parent.at(rho) / r;
                best = std::min(best, bound);
            }
            return best;
        };
    }
    return out;
}

TruncatedSeries integrate_from_zero(const TruncatedSeries& s) {
    const int n = s.degree();
    std::vector<cplx> c(static_cast<size_t>(n) + 2, cplx(0.0));
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i + 1)] = s.coeffs[static_cast<size_t>(i)] / static_cast<double>(i + 1);
    TruncatedSeries out(std::move(c), s.validity_radius);
    if (s.tail.fn) {
        auto parent = s.tail;
        const int trunc_n = n;
        out.tail.kind = parent.kind;
        out.tail.fn = [parent, trunc_n](double r) { return r * parent.at(r) / (trunc_n + 2); };
    }
    return out;
}

TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den, int n_out) {
    if (std::abs(den.coeff(0)) == 0.0)
        throw std::invalid_argument("divide: denominator must not vanish at 0");
    std::vector<cplx> q(static_cast<size_t>(n_out) + 1, cplx(0.0));
    const cplx d0 = den.coeff(0);
    for (int n = 0; n <= n_out; ++n) {
        cplx acc = num.coeff(n);
        const int jhi = std::min(n, den.degree());
        for (int j = 1; j <= jhi; ++j)
            acc -= den.coeffs[static_cast<size_t>(j)] * q[static_cast<size_t>(n - j)];
        q[static_cast<size_t>(n)] = acc / d0;
    }
    TruncatedSeries out(std::move(q), std::min(num.validity_radius, den.validity_radius));
    out.tail = TailBound::heuristic({});
    return out;
}

TruncatedSeries pow_series(const TruncatedSeries& u, double gamma, int n_out) {
    if (std::abs(u.coeff(0) - cplx(1.0)) != 0.0)
        throw std::invalid_argument("pow_series: u(0) must equal 1");
    std::vector<cplx> p(static_cast<size_t>(n_out) + 1, cplx(0.0));
    p[0] = cplx(1.0);
    for (int n = 1; n <= n_out; ++n) {
        cplx acc(0.0);
        const int ihi = std::min(n, u.degree());
        for (int i = 1; i <= ihi; ++i)
            acc += (gamma * i - (n - i)) * u.coeffs[static_cast<size_t>(i)] * p[static_cast<size_t>(n - i)];
        p[static_cast<size_t>(n)] = acc / static_cast<double>(n);
    }
    TruncatedSeries out(std::move(p), u.validity_radius);
    out.tail = TailBound::heuristic({});
    return out;
}

TruncatedSeries exp_series(const TruncatedSeries& u, int n_out) {
    if (std::abs(u.coeff(0)) != 0.0)
        throw std::invalid_argument("exp_series: u(0) must equal 0");
    std::vector<cplx> e(static_cast<size_t>(n_out) + 1, cplx(0.0));
    e[0] = cplx(1.0);
    for (int n = 1; n <= n_out; ++n) {
        cplx acc(0.0);
        const int ihi = std::min(n, u.degree());
        for (int i = 1; i <= ihi; ++i)
            acc += static_cast<double>(i) * u.coeffs[static_cast<size_t>(i)] * e[static_cast<size_t>(n - i)];
        e[static_cast<size_t>(n)] = acc / static_cast<double>(n);
    }
    TruncatedSeries out(std::move(e), u.validity_radius);
    out.tail = TailBound::heuristic({});
    return out;
}

double boundary_max_abs(const TruncatedSeries& s, double r, int n_points) {
    double best = 0.0;
    for (int j = 0; j < n_points; ++j) {
        const double th = 2.0 * std::numbers::pi * j / n_points;
        const cplx z = std::polar(r, th);
        best = std::max(best, std::abs(s.eval(z)));
    }
    return best;
}

double sup_norm_estimate(const TruncatedSeries& s, int n_points) {
    return boundary_max_abs(s, s.validity_radius, n_points) * (1.0 + 1e-6);
}

double fp_sum_slack(int n_terms, double magnitude) {
    const double u = std::numeric_limits<double>::epsilon();
    return 4.0 * (n_terms + 4) * u * magnitude;
}

} // namespace bohrlab

#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "bohrlab/errors.hpp"

namespace bohrlab {

using cplx = std::complex<double>;

/// Certified bound on the dropped part of a truncated power series.
///
/// `at(r)` bounds |sum_{n>N} a_n r^n| for the series the truncation came
/// from.  The kind records which analytic argument produced the bound;
/// anything but `heuristic` is rigorous.
struct TailBound {
    enum class Kind { zero, geometric_ratio, cauchy_estimate, heuristic };

    Kind kind = Kind::zero;
    std::function<double(double)> fn; // empty => identically zero

    double at(double r) const { return fn ? fn(r) : 0.0; }
    bool rigorous() const { return kind != Kind::heuristic; }

    static TailBound zero() { return {}; }

    /// |a_n| <= coef * ratio^n for all n > trunc_n.
    static TailBound geometric(double coef, double ratio, int trunc_n);

    /// |a_n| <= sup_bound / rho^n for all n > trunc_n (Cauchy estimate on |z| = rho).
    static TailBound cauchy(double sup_bound, double rho, int trunc_n);

    static TailBound heuristic(std::function<double(double)> fn);
};

/// Finite slice a_0..a_N of a power series.  The coefficients are the exact
/// Taylor coefficients of the represented function; `tail` bounds everything
/// beyond index N on (0, validity_radius).
struct TruncatedSeries {
    std::vector<cplx> coeffs;        // a_0..a_N, N >= 0
    double validity_radius = 1.0;    // in (0, 1]
    TailBound tail;

    TruncatedSeries() : coeffs(1, cplx(0.0)) {}
    TruncatedSeries(std::vector<cplx> c, double validity, TailBound t = TailBound::zero());
    static TruncatedSeries from_real(const std::vector<double>& c, double validity,
                                     TailBound t = TailBound::zero());

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    cplx coeff(int n) const {
        return (n >= 0 && n <= degree()) ? coeffs[static_cast<size_t>(n)] : cplx(0.0);
    }

    /// Horner evaluation of the polynomial part.
    cplx eval(cplx z) const;
};

struct MajorantSum {
    double value; // sum_{n=from}^{N} |a_n| r^n
    double tail;  // tail bound at r
};

/// Partial majorant sum with its truncation certificate.  Throws
/// std::domain_error when r is outside [0, validity) and
/// std::invalid_argument when from_index is not in [0, N+1].
MajorantSum majorant_sum(const TruncatedSeries& s, double r, int from_index = 0);

/// Coefficient-exact product truncated at n_out; the tail combines the input
/// certificates with a Cauchy-style bound on the dropped convolution terms.
TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b, int n_out);

/// Taylor coefficients 0..n_out of outer(inner(z)).  inner must vanish at 0.
/// inner_cap, when >= 0, is a caller-certified bound for sup |inner| on the
/// inner validity disk; otherwise a boundary scan estimates it (heuristic).
/// The result's tail is a Cauchy estimate on an intermediate circle.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner, int n_out,
                        double inner_cap = -1.0);

TruncatedSeries differentiate(const TruncatedSeries& s);
TruncatedSeries integrate_from_zero(const TruncatedSeries& s);

TruncatedSeries scalar_multiply(cplx c, const TruncatedSeries& s);

// Recurrence-based transforms used by the family catalog.  Coefficients are
// exact; callers attach the tail certificate they can justify.
TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den, int n_out);
TruncatedSeries pow_series(const TruncatedSeries& u, double gamma, int n_out); // u(0) = 1
TruncatedSeries exp_series(const TruncatedSeries& u, int n_out);               // u(0) = 0

/// max |s(r e^{i theta})| over n_points equispaced angles.
double boundary_max_abs(const TruncatedSeries& s, double r, int n_points = 4096);

/// Dense boundary scan times a 1+1e-6 safety factor; heuristic unless the
/// caller knows the closed form.
double sup_norm_estimate(const TruncatedSeries& s, int n_points = 4096);

/// Forward-error allowance for a sum of n_terms nonnegative evaluated terms
/// of total magnitude `magnitude`; used when a certificate compares two
/// floating-point majorant sums.
double fp_sum_slack(int n_terms, double magnitude);

} // namespace bohrlab

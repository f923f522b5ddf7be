#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Quasiconformality constant K >= 1 together with the dilatation bound
/// k = (K-1)/(K+1) in [0,1); kept mutually consistent.
struct QuasiParam {
    double K = 1.0;
    double k = 0.0;

    static QuasiParam from_K(double K);
    static QuasiParam from_k(double k);

    double k_plus_1() const { return k + 1.0; } // equals 2K/(K+1)
    double k_plus_2() const { return k + 2.0; } // equals (3K+1)/(K+1)
};

struct MaMindaPhi {
    enum class Kind { janowski, order_alpha, classical };

    Kind kind = Kind::classical;
    double A = 1.0, B = -1.0; // janowski
    double alpha = 0.0;       // order_alpha

    static MaMindaPhi janowski(double A, double B);
    static MaMindaPhi order_alpha(double alpha);
    static MaMindaPhi classical();

    // Janowski normal form: classical -> (1,-1), order alpha -> (1-2a,-1).
    double ja() const;
    double jb() const;
};

struct FunctionFamily {
    enum class Kind { concave_pole, mm_convex, mm_starlike, bounded_analytic, univalent_baseline };

    Kind kind = Kind::bounded_analytic;
    double p = 0.5;   // concave_pole
    MaMindaPhi phi;   // mm_convex / mm_starlike

    static FunctionFamily concave(double p);
    static FunctionFamily convex(MaMindaPhi phi);
    static FunctionFamily starlike(MaMindaPhi phi);
    static FunctionFamily bounded();
    static FunctionFamily univalent();

    bool is_ma_minda() const { return kind == Kind::mm_convex || kind == Kind::mm_starlike; }
    /// Families with an extremal coefficient family in the catalog.
    bool has_extremal() const {
        return kind == Kind::concave_pole || is_ma_minda();
    }
};

enum class InequalityType { bohr, bohr_rogosinski };

struct InequalityKind {
    InequalityType type = InequalityType::bohr;
    int n = 1; // partial-sum index for the bounded-analytic Rogosinski baseline only
};

/// |c_n| (concave / Ma-Minda convex) or |d_n| (Ma-Minda starlike) of the
/// family's extremal function, by stable recurrence.
double extremal_coeff(const FunctionFamily& f, int n);

/// Signed coefficient of the extremal (real for every catalog family).
double extremal_coeff_signed(const FunctionFamily& f, int n);

/// True when every extremal Taylor coefficient is >= 0 (always for the
/// catalog except Janowski with B > 0).
bool extremal_coeffs_nonnegative(const FunctionFamily& f);

/// Truncation of the extremal series with a rigorous tail certificate.
/// n_trunc may be lowered internally for concave families with small p to
/// keep coefficients inside double range; the tail still covers the rest.
TruncatedSeries extremal_series(const FunctionFamily& f, int n_trunc);

/// Closed-form value of k_p(r), k-hat_phi(r) or h-hat_phi(r); for Janowski
/// parameters with mixed coefficient signs (B > 0) the absolute series is
/// summed to convergence with a certified remainder.
double extremal_majorant(const FunctionFamily& f, double r);
double extremal_majorant_derivative(const FunctionFamily& f, double r);

/// Signed value of the extremal at a real point x, |x| < validity radius
/// (k_p, k_phi or h_phi from the closed forms).
double extremal_point_value(const FunctionFamily& f, double x);

/// p/(1+p)^2, -k_phi(-1) or -h_phi(-1).
double boundary_distance(const FunctionFamily& f);

/// lim_{r->1} of the absolute extremal series; +inf when it diverges.
/// Concave families always diverge at their pole and report +inf.
double majorant_limit_at_one(const FunctionFamily& f);

struct BohrObjective {
    std::function<double(double)> g;  // strictly increasing; unique root is the radius
    std::function<double(double)> dg; // analytic derivative
    double bracket_lo = 0.0;
    double bracket_hi = 1.0;
    double limit_at_one = std::numeric_limits<double>::infinity(); // of g as r -> bracket_hi
    bool case_one = false; // Ma-Minda: limit vanishes, radius is 1/3 outright
    std::string note;      // degenerate-parameter diagnostics
};

BohrObjective bohr_objective(const FunctionFamily& f, const QuasiParam& q, InequalityKind kind);

/// h = (extremal of f) composed with the Schwarz series omega, truncated at
/// n_trunc, computed by the catalog's closed-form recurrences with a Cauchy
/// tail certificate.  omega_cap must certify sup |omega| on the unit disk.
TruncatedSeries subordinate_series(const FunctionFamily& f, const TruncatedSeries& omega,
                                   int n_trunc, double omega_cap);

/// Grammar: concave:p=0.5 | convex:classical | convex:alpha=0.25 |
/// convex:janowski:A=1,B=-1 | starlike:... | bounded | univalent
FunctionFamily parse_family(std::string_view spec);
std::string to_string(const FunctionFamily& f);
std::string to_string(InequalityType t);

} // namespace bohrlab

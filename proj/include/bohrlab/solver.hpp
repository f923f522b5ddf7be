#pragma once

#include <optional>
#include <string>

#include "bohrlab/families.hpp"

namespace bohrlab {

/// Every solved radius must back-substitute into its defining equation to
/// within this residual.
inline constexpr double residual_tolerance = 1e-12;

enum class SolveMethod { closed_form, bisection, newton_safeguarded, case_one_third };
std::string to_string(SolveMethod m);

struct RadiusQuery {
    FunctionFamily family;
    QuasiParam quasi;
    InequalityKind kind;
};

struct RadiusResult {
    double value = 0.0;
    double residual = 0.0;        // |G(unclamped_root)|; 0 by convention for fixed radii
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    SolveMethod method = SolveMethod::closed_form;
    bool sharp = false;
    std::string sharp_reason;
    bool clamped_at_one_third = false;
    double unclamped_root = 0.0;  // root of the defining equation, even when clamped
    std::string note;
};

/// The radius for the query's family/kind: closed forms where the catalog
/// has them (cross-checked against the bracketed solver), safeguarded
/// bracketed root finding otherwise, Ma-Minda one-third branch logic on top.
RadiusResult solve_radius(const RadiusQuery& q);

/// Closed-form value when available: concave quadratic (both kinds),
/// classical convex, classical starlike.  Empty otherwise.
std::optional<double> closed_form_radius(const RadiusQuery& q);

enum class BaselineType { bohr_classic, rogosinski_n, convex_subordination, univalent_subordination };

struct BaselineKind {
    BaselineType type = BaselineType::bohr_classic;
    int n = 1; // rogosinski_n partial-sum index
};

RadiusResult baseline_radius(BaselineKind which, const QuasiParam& q);

struct RootFindResult {
    double root;
    double residual;
    SolveMethod method;
};

/// Root of a strictly increasing g with g(lo) < 0 < g(hi): bisection to
/// width 1e-14 then two guarded Newton polish steps (rejected if they leave
/// the bracket).  Throws SolverError when the bracket shows no sign change.
RootFindResult find_root_increasing(const std::function<double(double)>& g,
                                    const std::function<double(double)>& dg, double lo, double hi);

} // namespace bohrlab

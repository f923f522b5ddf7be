#pragma once

#include <cstdint>
#include <string>

#include "bohrlab/families.hpp"
#include "bohrlab/solver.hpp"

namespace bohrlab {

enum class Verdict { holds, violated, inconclusive };
std::string to_string(Verdict v);

/// Certified one-sided comparison lhs <= rhs.  lhs_tail bounds everything
/// the floating partial sums cannot see (series tails of both sides plus a
/// summation round-off allowance), so Holds and Violated are both sound;
/// margins inside the band are Inconclusive.
struct Certificate {
    double lhs = 0.0;
    double lhs_tail = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs - lhs_tail
    Verdict verdict = Verdict::holds;

    static Certificate make(double lhs, double lhs_tail, double rhs);
};

struct DilatationSpec {
    double modulus = 0.0; // sup bound, <= k
    double psi = 0.0;     // phase of the unimodular factor
    bool blaschke = false;
    cplx zero = 0.0;      // Blaschke factor parameter, |zero| <= 0.9
};

struct SampleProvenance {
    bool is_extremal = false;
    std::uint64_t seed = 0;
    cplx lambda = 1.0; // unimodular rotation of the extremal co-analytic part
};

/// f = h + conj(g) with h analytic, g(0) = 0 and |g'| <= k |h'| on the
/// probed disk.
struct HarmonicSample {
    TruncatedSeries h;
    TruncatedSeries g;
    double dilatation_bound = 0.0;
    FunctionFamily family;
    SampleProvenance prov;
};

/// omega(z) = rho e^{i theta} z prod_j (z + t_j)/(1 + conj(t_j) z), truncated;
/// vanishes at 0 with sup exactly rho on the closed disk.
TruncatedSeries schwarz_from_params(double theta, const std::vector<cplx>& zeros, double cap,
                                    int n_trunc);

/// Seeded draw of the parameters above: degree d in [1,4] factors total,
/// |t_j| <= 0.9.  Deterministic in the seed.
TruncatedSeries sample_schwarz(std::uint64_t seed, int degree, double cap, int n_trunc);

/// Certified sup-norm for a Schwarz series built by the two functions above:
/// the closed-form cap plus the truncation tail near the boundary.
double schwarz_poly_cap(const TruncatedSeries& omega, double cap);

HarmonicSample build_sample(const FunctionFamily& f, const QuasiParam& q,
                            const TruncatedSeries& omega, double omega_cap,
                            const DilatationSpec& dil, int n_trunc);

HarmonicSample random_sample(const FunctionFamily& f, const QuasiParam& q, std::uint64_t seed,
                             int n_trunc);

HarmonicSample extremal_sample(const FunctionFamily& f, const QuasiParam& q, cplx lambda,
                               int n_trunc);

/// sum_{n>=1} (|a_n| + |b_n|) r^n  vs  d(phi(0), boundary).
Certificate check_bohr(const HarmonicSample& s, const FunctionFamily& f, double r);

enum class ThresholdForm { proof_form, statement_form };

/// sup_{|z|=r} |h(z)| + sum_{n>=1} (|a_n| + |b_n|) r^n  vs  |phi(0)| + d
/// (proof form, default) or d (statement form).  Concave families only.
Certificate check_rogosinski(const HarmonicSample& s, const FunctionFamily& f, double r,
                             ThresholdForm form = ThresholdForm::proof_form);

struct EmpiricalRadius {
    double value = 0.0;
    bool hit_bracket_top = false; // no violation anywhere below the bracket top
    int inconclusive_hits = 0;    // certificate-resolution region encounters
};

/// Largest r (to 1e-8) that still Holds, by bisection on the verdict.
EmpiricalRadius empirical_radius(const HarmonicSample& s, const FunctionFamily& f,
                                 InequalityKind kind);

// Executable forms of the comparison lemmas.  The 1/3-restricted ones
// throw std::domain_error beyond r = 1/3.
Certificate lemma_tail_subordination(const TruncatedSeries& f, const TruncatedSeries& g,
                                     int from_n, double r);
Certificate lemma_dilatation(const TruncatedSeries& h, const TruncatedSeries& g, double k,
                             double r);
Certificate lemma_coefficient_domination(const TruncatedSeries& f, const FunctionFamily& family,
                                         double r);
/// Two-sided growth bound -m(-r) <= |f(z)| <= m(r); reports the binding side.
Certificate lemma_growth(const TruncatedSeries& f, const FunctionFamily& family, double r);

enum class LemmaId { lemma_2_1, lemma_2_2, lemma_3_5, growth_convex, growth_starlike };

struct LemmaInstance {
    TruncatedSeries lhs_series;
    TruncatedSeries rhs_series; // lemma_2_1 target / lemma_2_2 co-analytic part
    FunctionFamily family;      // lemma_3_5 and growth
    double k = 0.0;             // lemma_2_2
    int from_n = 1;             // lemma_2_1
};

Certificate lemma_check(LemmaId which, const LemmaInstance& inst, double r);

struct EnsembleReport {
    FunctionFamily family;
    double K = 1.0;
    InequalityType kind = InequalityType::bohr;
    double r = 0.0;
    int trials = 0;
    int holds = 0;
    int violated = 0;
    int inconclusive = 0;
    double min_margin = 0.0;
    std::uint64_t seed_base = 0;
};

/// Seeded Monte-Carlo certification at radius r; trial outcomes are
/// aggregated order-independently across workers.
EnsembleReport run_ensemble(const FunctionFamily& f, const QuasiParam& q, InequalityType kind,
                            int trials, std::uint64_t seed_base, double r, int n_trunc,
                            int n_threads = 0);

/// hardware_concurrency capped by the BOHRLAB_THREADS environment variable.
int worker_count();

} // namespace bohrlab

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not tuned at runtime.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bohrlab/certify.hpp"
#include "bohrlab/families.hpp"
#include "bohrlab/solver.hpp"

using namespace bohrlab;

namespace {

int g_failures = 0;

struct Criterion {
    bool ok = true;
    std::string detail;
    long checks = 0;
    void require(bool cond, const std::string& msg) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

template <class Body>
void criterion(int num, const std::string& name, Body&& body) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    body(c);
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%ld checks, %.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", num,
                name.c_str(), c.checks, dt, c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++g_failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

RadiusResult solve(const FunctionFamily& f, double K, InequalityType t = InequalityType::bohr) {
    return solve_radius({f, QuasiParam::from_K(K), {t, 1}});
}

double concave_k1_oracle(double p) {
    return (1.0 + 1.0 / p + p) - (std::sqrt(p) + 1.0 / std::sqrt(p)) * std::sqrt(p + 1.0 / p);
}

const std::vector<double> kKGrid = {1.0, 1.5, 2.0, 5.0, 10.0, 100.0};
const std::vector<std::pair<double, double>> kJanowskiGrid = {
    {1.0, -1.0}, {0.5, -0.5}, {1.0, 0.0}, {0.0, -1.0}, {0.5, 0.0}};

std::vector<FunctionFamily> ma_minda_grid() {
    std::vector<FunctionFamily> fams;
    for (bool convex : {true, false}) {
        auto add = [&](MaMindaPhi phi) {
            fams.push_back(convex ? FunctionFamily::convex(phi) : FunctionFamily::starlike(phi));
        };
        add(MaMindaPhi::classical());
        for (int i = 1; i <= 9; ++i) add(MaMindaPhi::order_alpha(i / 10.0));
        for (auto [A, B] : kJanowskiGrid) add(MaMindaPhi::janowski(A, B));
    }
    return fams;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

double uniform(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1p-53; }

} // namespace

int main() {
    criterion(1, "classical convex radius (K+1)/(5K+1), exact one third at K=1", [](Criterion& c) {
        Timer t;
        auto f = FunctionFamily::convex(MaMindaPhi::classical());
        const auto r1 = solve(f, 1.0);
        c.require(std::abs(r1.value - 1.0 / 3.0) <= 1e-12,
                  "K=1 value " + fmt(r1.value) + " not within 1e-12 of 1/3");
        for (double K : {1.0, 2.0, 5.0, 100.0}) {
            const double v = solve(f, K).value;
            const double want = (K + 1.0) / (5.0 * K + 1.0);
            c.require(std::abs(v - want) <= 1e-10,
                      "K=" + fmt(K) + ": " + fmt(v) + " vs " + fmt(want));
        }
        c.require(t.seconds() < 1.0, "runtime exceeded 1 s");
    });

    criterion(2, "classical starlike radius (5K+1-2sqrt(6K^2+2K))/(K+1)", [](Criterion& c) {
        auto f = FunctionFamily::starlike(MaMindaPhi::classical());
        for (double K : {1.0, 2.0, 5.0, 100.0}) {
            const double v = solve(f, K).value;
            const double want =
                (5.0 * K + 1.0 - 2.0 * std::sqrt(6.0 * K * K + 2.0 * K)) / (K + 1.0);
            c.require(std::abs(v - want) <= 1e-10,
                      "K=" + fmt(K) + ": " + fmt(v) + " vs " + fmt(want));
        }
        const double v1 = solve(f, 1.0).value;
        c.require(std::abs(v1 - (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-12,
                  "K=1 value " + fmt(v1) + " not within 1e-12 of 3-2sqrt2");
    });

    criterion(3, "concave K=1 radii match the surd closed form on the p grid", [](Criterion& c) {
        Timer t;
        for (int i = 1; i <= 9; ++i) {
            const double p = i / 10.0;
            const double v = solve(FunctionFamily::concave(p), 1.0).value;
            c.require(std::abs(v - concave_k1_oracle(p)) <= 1e-10,
                      "p=" + fmt(p) + ": " + fmt(v) + " vs " + fmt(concave_k1_oracle(p)));
        }
        c.require(t.seconds() < 1.0, "runtime exceeded 1 s");
    });

    criterion(4, "defining-equation residual <= 1e-12 on the standard grid", [](Criterion& c) {
        for (double K : kKGrid) {
            for (int i = 1; i <= 9; ++i) {
                auto f = FunctionFamily::concave(i / 10.0);
                for (auto kind : {InequalityType::bohr, InequalityType::bohr_rogosinski}) {
                    const auto res = solve(f, K, kind);
                    c.require(res.residual <= residual_tolerance,
                              to_string(f) + " K=" + fmt(K) + " residual " + fmt(res.residual));
                }
            }
            for (const auto& f : ma_minda_grid()) {
                const auto res = solve(f, K);
                c.require(res.residual <= residual_tolerance,
                          to_string(f) + " K=" + fmt(K) + " residual " + fmt(res.residual));
            }
        }
    });

    criterion(5, "ordering: Rogosinski < Bohr, nonincreasing in K, range bounds", [](Criterion& c) {
        Timer t;
        for (int i = 1; i <= 9; ++i) {
            auto f = FunctionFamily::concave(i / 10.0);
            double prev = 1.0;
            for (double K : kKGrid) {
                const double rb = solve(f, K).value;
                const double rr = solve(f, K, InequalityType::bohr_rogosinski).value;
                c.require(rr < rb, to_string(f) + " K=" + fmt(K) + ": Rogosinski not below Bohr");
                c.require(rb > 0.0 && rb < f.p, to_string(f) + ": radius outside (0,p)");
                c.require(rb < prev, to_string(f) + " K=" + fmt(K) + ": not strictly decreasing");
                prev = rb;
            }
        }
        for (const auto& f : ma_minda_grid()) {
            double prev = 1.0;
            for (double K : kKGrid) {
                const double v = solve(f, K).value;
                c.require(v <= 1.0 / 3.0 + 1e-15, to_string(f) + ": radius above 1/3");
                c.require(v <= prev + 1e-14, to_string(f) + " K=" + fmt(K) + ": increased in K");
                prev = v;
            }
        }
        c.require(t.seconds() < 10.0, "runtime exceeded 10 s");
    });

    criterion(6, "sharpness: extremal violates just beyond, holds just inside", [](Criterion& c) {
        Timer t;
        std::vector<FunctionFamily> fams;
        for (int i = 1; i <= 9; ++i) fams.push_back(FunctionFamily::concave(i / 10.0));
        for (const auto& f : ma_minda_grid()) fams.push_back(f);
        for (const auto& f : fams) {
            for (double K : {1.0, 2.0, 5.0, 100.0}) {
                std::vector<InequalityType> kinds = {InequalityType::bohr};
                if (f.kind == FunctionFamily::Kind::concave_pole)
                    kinds.push_back(InequalityType::bohr_rogosinski);
                for (auto kind : kinds) {
                    const auto res = solve(f, K, kind);
                    if (!res.sharp) continue;
                    const auto q = QuasiParam::from_K(K);
                    const auto ex = extremal_sample(f, q, cplx(1.0), 2048);
                    auto check = [&](double r) {
                        return kind == InequalityType::bohr ? check_bohr(ex, f, r)
                                                            : check_rogosinski(ex, f, r);
                    };
                    const auto beyond = check(res.value * (1.0 + 1e-3));
                    c.require(beyond.verdict == Verdict::violated,
                              to_string(f) + " K=" + fmt(K) + " " + to_string(kind) +
                                  ": no violation at radius*(1+1e-3), margin " +
                                  fmt(beyond.margin));
                    const auto inside = check(res.value * (1.0 - 1e-6));
                    c.require(inside.verdict == Verdict::holds ||
                                  inside.margin >= -inside.lhs_tail,
                              to_string(f) + " K=" + fmt(K) + " " + to_string(kind) +
                                  ": fails at radius*(1-1e-6), margin " + fmt(inside.margin));
                }
            }
        }
        c.require(t.seconds() < 30.0, "runtime exceeded 30 s");
    });

    criterion(7, "Monte-Carlo soundness: 1000 seeded samples per family, K in {1,2,10}",
              [](Criterion& c) {
                  Timer t;
                  struct Config {
                      FunctionFamily f;
                      InequalityType kind;
                  };
                  const std::vector<Config> configs = {
                      {FunctionFamily::concave(0.5), InequalityType::bohr},
                      {FunctionFamily::concave(0.5), InequalityType::bohr_rogosinski},
                      {FunctionFamily::convex(MaMindaPhi::classical()), InequalityType::bohr},
                      {FunctionFamily::starlike(MaMindaPhi::classical()), InequalityType::bohr},
                      {FunctionFamily::starlike(MaMindaPhi::order_alpha(0.25)),
                       InequalityType::bohr},
                      {FunctionFamily::convex(MaMindaPhi::janowski(0.5, -0.5)),
                       InequalityType::bohr},
                  };
                  const int trials = 1000;
                  for (const auto& cfg : configs) {
                      for (double K : {1.0, 2.0, 10.0}) {
                          const auto q = QuasiParam::from_K(K);
                          const auto res = solve(cfg.f, K, cfg.kind);
                          const double r = res.value * (1.0 - 1e-6);
                          const auto rep = run_ensemble(cfg.f, q, cfg.kind, trials,
                                                        20250810, r, 2048);
                          c.require(rep.violated == 0,
                                    to_string(cfg.f) + " K=" + fmt(K) + " " +
                                        to_string(cfg.kind) + ": " +
                                        std::to_string(rep.violated) + " violations");
                          c.require(rep.inconclusive < trials / 100,
                                    to_string(cfg.f) + " K=" + fmt(K) + ": " +
                                        std::to_string(rep.inconclusive) + " inconclusive");
                      }
                  }
                  c.require(t.seconds() < 300.0, "runtime exceeded 5 min");
              });

    criterion(8, "baselines: Rogosinski ladder and the univalent root", [](Criterion& c) {
        const auto q1 = QuasiParam::from_K(1.0);
        const double r1 = baseline_radius({BaselineType::rogosinski_n, 1}, q1).value;
        c.require(std::abs(r1 - (std::sqrt(5.0) - 2.0)) <= 1e-10,
                  "R_1 = " + fmt(r1) + " vs sqrt5-2");
        double prev = 0.0;
        for (int n = 1; n <= 12; ++n) {
            const double v = baseline_radius({BaselineType::rogosinski_n, n}, q1).value;
            c.require(v > prev && v < 1.0, "R_N ladder broke at N=" + std::to_string(n));
            prev = v;
        }
        const double u1 = baseline_radius({BaselineType::univalent_subordination, 1}, q1).value;
        c.require(std::abs(u1 - (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-10,
                  "univalent K=1 = " + fmt(u1) + " vs 3-2sqrt2");
    });

    criterion(9, "starlike order-alpha: root crosses 1/3 exactly at alpha*", [](Criterion& c) {
        for (double k : {0.0, 1.0 / 3.0, 0.8}) {
            const double K = (1.0 + k) / (1.0 - k);
            const double alpha_star = 0.5 * std::log(3.0 + 3.0 * k) / std::log(3.0);
            int last_below = -1;
            bool monotone_flip = true;
            bool seen_above = false;
            for (int i = 1; i <= 99; ++i) {
                const double alpha = i / 100.0;
                const auto res =
                    solve(FunctionFamily::starlike(MaMindaPhi::order_alpha(alpha)), K);
                const bool below = res.unclamped_root <= 1.0 / 3.0;
                if (below) {
                    if (seen_above) monotone_flip = false;
                    last_below = i;
                } else {
                    seen_above = true;
                }
            }
            c.require(monotone_flip, "k=" + fmt(k) + ": sign flipped more than once");
            c.require(last_below >= 1, "k=" + fmt(k) + ": no grid point below 1/3");
            const double flip_alpha = last_below / 100.0;
            c.require(std::abs(flip_alpha - alpha_star) <= 0.01 + 1e-12,
                      "k=" + fmt(k) + ": flip at " + fmt(flip_alpha) + " vs alpha* " +
                          fmt(alpha_star));
        }
    });

    criterion(10, "lemma suite: subordination tails, dilatation pairs, rotated extremals",
              [](Criterion& c) {
                  const int n_series = 512;
                  const std::vector<double> r_grid = {0.1, 0.2, 1.0 / 3.0};
                  std::mt19937_64 eng(20250810);

                  std::vector<FunctionFamily> targets = {
                      FunctionFamily::convex(MaMindaPhi::classical()),
                      FunctionFamily::convex(MaMindaPhi::order_alpha(0.3)),
                      FunctionFamily::convex(MaMindaPhi::janowski(0.5, -0.5)),
                      FunctionFamily::starlike(MaMindaPhi::classical()),
                      FunctionFamily::starlike(MaMindaPhi::order_alpha(0.25)),
                      FunctionFamily::starlike(MaMindaPhi::janowski(1.0, 0.0)),
                      FunctionFamily::concave(0.5),
                      FunctionFamily::concave(0.8),
                  };

                  // 500 random subordinated pairs, tail comparison at N in {1,2,5}
                  for (int trial = 0; trial < 500; ++trial) {
                      const auto& target = targets[trial % targets.size()];
                      const double bound =
                          target.kind == FunctionFamily::Kind::concave_pole ? 0.9 * target.p : 0.9;
                      const double cap = bound * (0.1 + 0.85 * uniform(eng));
                      const int degree = 1 + static_cast<int>(eng() % 4);
                      auto omega = sample_schwarz(eng(), degree, cap, n_series);
                      auto sub = subordinate_series(target, omega, n_series,
                                                    schwarz_poly_cap(omega, cap));
                      auto tgt = extremal_series(target, n_series);
                      for (int n0 : {1, 2, 5})
                          for (double r : r_grid) {
                              const auto cert = lemma_tail_subordination(sub, tgt, n0, r);
                              c.require(cert.verdict == Verdict::holds,
                                        "subordination pair " + std::to_string(trial) + " N=" +
                                            std::to_string(n0) + " r=" + fmt(r) + ": " +
                                            to_string(cert.verdict) + " margin " +
                                            fmt(cert.margin));
                          }
                  }

                  // 500 dilatation-linked pairs
                  for (int trial = 0; trial < 500; ++trial) {
                      const auto& target = targets[trial % targets.size()];
                      const double bound =
                          target.kind == FunctionFamily::Kind::concave_pole ? 0.9 * target.p : 0.9;
                      const double cap = bound * (0.1 + 0.85 * uniform(eng));
                      const int degree = 1 + static_cast<int>(eng() % 4);
                      auto omega = sample_schwarz(eng(), degree, cap, n_series);
                      const double k = 0.1 + 0.8 * uniform(eng);
                      DilatationSpec dil;
                      dil.modulus = k;
                      dil.psi = 2.0 * 3.14159265358979 * uniform(eng);
                      dil.blaschke = true;
                      dil.zero = std::polar(0.85 * std::sqrt(uniform(eng)),
                                            2.0 * 3.14159265358979 * uniform(eng));
                      auto s = build_sample(target, QuasiParam::from_k(k), omega,
                                            schwarz_poly_cap(omega, cap), dil, n_series);
                      for (double r : r_grid) {
                          const auto cert = lemma_dilatation(s.h, s.g, k, r);
                          c.require(cert.verdict == Verdict::holds,
                                    "dilatation pair " + std::to_string(trial) + " r=" + fmt(r) +
                                        ": " + to_string(cert.verdict) + " margin " +
                                        fmt(cert.margin));
                      }
                  }

                  // 200 rotated extremals: exact majorant equality, never violated
                  std::vector<FunctionFamily> convex_fams = {
                      FunctionFamily::convex(MaMindaPhi::classical()),
                      FunctionFamily::convex(MaMindaPhi::order_alpha(0.5)),
                      FunctionFamily::convex(MaMindaPhi::order_alpha(0.8)),
                      FunctionFamily::convex(MaMindaPhi::janowski(0.5, -0.5)),
                  };
                  for (int trial = 0; trial < 200; ++trial) {
                      const auto& fam = convex_fams[trial % convex_fams.size()];
                      auto rot = extremal_series(fam, n_series);
                      const double theta = 2.0 * 3.14159265358979 * uniform(eng);
                      cplx phase(1.0);
                      const cplx step = std::polar(1.0, theta);
                      for (int n = 1; n <= rot.degree(); ++n) {
                          rot.coeffs[static_cast<size_t>(n)] *= phase;
                          phase *= step;
                      }
                      for (double r : r_grid) {
                          const auto cert = lemma_coefficient_domination(rot, fam, r);
                          c.require(cert.verdict != Verdict::violated,
                                    "rotated extremal " + std::to_string(trial) + " r=" + fmt(r) +
                                        " violated");
                          c.require(std::abs(cert.lhs - cert.rhs) <=
                                        1e-10 * std::max(1.0, cert.rhs),
                                    "rotated extremal " + std::to_string(trial) + " r=" + fmt(r) +
                                        ": majorants differ by " + fmt(cert.lhs - cert.rhs));
                      }
                  }
              });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}

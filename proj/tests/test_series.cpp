#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bohrlab/series.hpp"

using namespace bohrlab;

namespace {

// Concave extremal coefficients |c_n| = (1-p^{2n}) / ((1-p^2) p^{n-1}), the
// independent oracle for the closed form p r / ((p-r)(1-p r)).
TruncatedSeries concave_series(double p, int n_trunc) {
    std::vector<double> c(static_cast<size_t>(n_trunc) + 1, 0.0);
    for (int n = 1; n <= n_trunc; ++n)
        c[static_cast<size_t>(n)] =
            (1.0 - std::pow(p, 2 * n)) / ((1.0 - p * p) * std::pow(p, n - 1));
    return TruncatedSeries::from_real(c, p,
                                      TailBound::geometric(p / (1.0 - p * p), 1.0 / p, n_trunc));
}

double kp_closed(double p, double r) { return p * r / ((p - r) * (1.0 - p * r)); }

TruncatedSeries geometric_ones(int n_trunc) {
    std::vector<double> c(static_cast<size_t>(n_trunc) + 1, 1.0);
    return TruncatedSeries::from_real(c, 1.0, TailBound::geometric(1.0, 1.0, n_trunc));
}

} // namespace

TEST_CASE("majorant_sum: geometric coefficients at r = 1/3") {
    auto s = geometric_ones(50);
    const double r = 1.0 / 3.0;
    auto ms = majorant_sum(s, r, 0);
    const double partial = (1.0 - std::pow(r, 51)) / (1.0 - r);
    CHECK(ms.value == doctest::Approx(partial).epsilon(1e-15));
    // true sum 1.5 sits inside [value, value + tail]
    CHECK(ms.value <= 1.5);
    CHECK(ms.value + ms.tail >= 1.5);
}

TEST_CASE("majorant_sum: r = 0 kills every n >= 1 term") {
    auto s = concave_series(0.5, 40);
    auto ms = majorant_sum(s, 0.0, 1);
    CHECK(ms.value == 0.0);
}

TEST_CASE("majorant_sum: concave series against the partial-fraction closed form") {
    const double p = 0.5, r = 0.1;
    auto s = concave_series(p, 200);
    auto ms = majorant_sum(s, r, 0);
    const double exact = kp_closed(p, r);
    CHECK(exact == doctest::Approx(0.13157894736842105).epsilon(1e-14));
    CHECK(ms.value <= exact + 1e-15);
    CHECK(ms.value + ms.tail >= exact);
    CHECK(std::abs(exact - ms.value) <= ms.tail + 1e-15);
}

TEST_CASE("majorant_sum: domain and argument errors") {
    auto s = concave_series(0.5, 20);
    CHECK_THROWS_AS(majorant_sum(s, 0.5, 0), std::domain_error);
    CHECK_THROWS_AS(majorant_sum(s, 0.7, 0), std::domain_error);
    CHECK_THROWS_AS(majorant_sum(s, 0.1, 22), std::invalid_argument);
    CHECK_NOTHROW(majorant_sum(s, 0.1, 21)); // from_index == N+1 gives the empty sum
    CHECK(majorant_sum(s, 0.1, 21).value == 0.0);
}

TEST_CASE("majorant_sum: monotone in r and in truncation order") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> c(24);
        for (auto& x : c) {
            const double re = static_cast<double>(rng() >> 11) * 0x1p-53 * 2.0 - 1.0;
            const double im = static_cast<double>(rng() >> 11) * 0x1p-53 * 2.0 - 1.0;
            x = cplx(re, im);
        }
        TruncatedSeries s(c, 1.0);
        double prev = -1.0;
        for (double r = 0.0; r < 0.95; r += 0.05) {
            const double v = majorant_sum(s, r).value;
            CHECK(v >= prev);
            prev = v;
        }
        // adding terms never decreases the sum
        TruncatedSeries shorter(std::vector<cplx>(c.begin(), c.begin() + 12), 1.0);
        CHECK(majorant_sum(shorter, 0.5).value <= majorant_sum(s, 0.5).value + 1e-15);
    }
}

TEST_CASE("tail certificate: doubling N moves the sum by less than the tail bound") {
    // geometric-type coefficients 2 * 0.6^n
    auto build = [](int n_trunc) {
        std::vector<double> c(static_cast<size_t>(n_trunc) + 1);
        for (int n = 0; n <= n_trunc; ++n) c[static_cast<size_t>(n)] = 2.0 * std::pow(0.6, n);
        return TruncatedSeries::from_real(c, 1.0, TailBound::geometric(2.0, 0.6, n_trunc));
    };
    auto s32 = build(32), s64 = build(64);
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double v32 = majorant_sum(s32, r).value;
        const double v64 = majorant_sum(s64, r).value;
        CHECK(v64 - v32 <= s32.tail.at(r));
        CHECK(v64 >= v32);
    }
    // same check for the concave family, whose ratio is r/p
    auto c100 = concave_series(0.5, 100), c200 = concave_series(0.5, 200);
    for (double r : {0.05, 0.1, 0.2, 0.3, 0.4}) {
        const double d = majorant_sum(c200, r).value - majorant_sum(c100, r).value;
        CHECK(d >= 0.0);
        CHECK(d <= c100.tail.at(r));
    }
}

TEST_CASE("cauchy_product: convolution of ones and multiplicative identity") {
    auto ones = geometric_ones(12);
    auto prod = cauchy_product(ones, ones, 12);
    for (int n = 0; n <= 12; ++n)
        CHECK(prod.coeff(n).real() == doctest::Approx(n + 1.0));

    TruncatedSeries unit(std::vector<cplx>{cplx(1.0)}, 1.0);
    auto same = cauchy_product(ones, unit, 12);
    for (int n = 0; n <= 12; ++n) CHECK(same.coeff(n) == ones.coeff(n));
}

TEST_CASE("cauchy_product: 1/(1-z) times 1/(1-pz) at p = 0.5") {
    const double p = 0.5;
    std::vector<double> g(11);
    for (int n = 0; n <= 10; ++n) g[static_cast<size_t>(n)] = std::pow(p, n);
    auto a = geometric_ones(10);
    auto b = TruncatedSeries::from_real(g, 1.0, TailBound::geometric(1.0, p, 10));
    auto prod = cauchy_product(a, b, 10);
    // hand convolution for n <= 3, then the closed form 2(1 - 0.5^{n+1})
    CHECK(prod.coeff(0).real() == doctest::Approx(1.0));
    CHECK(prod.coeff(1).real() == doctest::Approx(1.5));
    CHECK(prod.coeff(2).real() == doctest::Approx(1.75));
    CHECK(prod.coeff(3).real() == doctest::Approx(1.875));
    for (int n = 0; n <= 10; ++n)
        CHECK(prod.coeff(n).real() == doctest::Approx(2.0 * (1.0 - std::pow(0.5, n + 1))));
}

TEST_CASE("compose: identity outer returns the inner") {
    std::vector<double> id{0.0, 1.0};
    auto outer = TruncatedSeries::from_real(id, 1.0);
    std::vector<double> w{0.0, 0.3, -0.1, 0.05};
    auto inner = TruncatedSeries::from_real(w, 1.0);
    auto comp = compose(outer, inner, 5, 0.45);
    for (int n = 0; n <= 5; ++n)
        CHECK(std::abs(comp.coeff(n) - inner.coeff(n)) <= 1e-15);
}

TEST_CASE("compose: geometric outer with inner cz gives c^n") {
    const double c = 0.4;
    auto outer = geometric_ones(20);
    auto inner = TruncatedSeries::from_real({0.0, c}, 1.0);
    auto comp = compose(outer, inner, 5, c);
    for (int n = 0; n <= 5; ++n)
        CHECK(comp.coeff(n).real() == doctest::Approx(std::pow(c, n)).epsilon(1e-14));
}

TEST_CASE("compose: k_{0.9} after a Blaschke-type inner, pointwise cross-check") {
    const double p = 0.9;
    auto outer = concave_series(p, 200);
    // inner(z) = 0.3 z (z + 0.5)/(1 + 0.5 z), |inner| <= 0.3 on the closed disk
    auto frac = divide(TruncatedSeries::from_real({0.5, 1.0}, 1.0),
                       TruncatedSeries::from_real({1.0, 0.5}, 1.0), 128);
    std::vector<cplx> ic(130, cplx(0.0));
    for (int n = 0; n <= 128; ++n) ic[static_cast<size_t>(n + 1)] = 0.3 * frac.coeff(n);
    TruncatedSeries inner(ic, 1.0, TailBound::geometric(0.9, 0.5, 129));

    auto comp = compose(outer, inner, 64, 0.3);
    for (int j = 0; j < 12; ++j) {
        const cplx z = std::polar(0.2, 2.0 * std::numbers::pi * j / 12.0);
        const cplx w = inner.eval(z);
        const cplx direct = p * w / ((p - w) * (1.0 - p * w));
        CHECK(std::abs(comp.eval(z) - direct) <= 1e-9);
    }
}

TEST_CASE("compose: precondition and domain errors") {
    auto outer = concave_series(0.5, 50);
    auto bad_inner = TruncatedSeries::from_real({0.1, 0.5}, 1.0);
    CHECK_THROWS_AS(compose(outer, bad_inner, 10, 0.6), std::invalid_argument);
    auto wide_inner = TruncatedSeries::from_real({0.0, 0.95}, 1.0);
    CHECK_THROWS_AS(compose(outer, wide_inner, 10, 0.95), CompositionDomainError);
}

TEST_CASE("compose: coefficient dominance by the majorant composition") {
    std::mt19937_64 rng(11);
    auto rnd = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1p-53;
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<cplx> oc(7), icc(7, cplx(0.0));
        std::vector<double> om(7), im(7, 0.0);
        for (int n = 0; n < 7; ++n) {
            oc[static_cast<size_t>(n)] = cplx(rnd(-1, 1), rnd(-1, 1));
            om[static_cast<size_t>(n)] = std::abs(oc[static_cast<size_t>(n)]);
        }
        for (int n = 1; n < 7; ++n) {
            icc[static_cast<size_t>(n)] = cplx(rnd(-0.1, 0.1), rnd(-0.1, 0.1));
            im[static_cast<size_t>(n)] = std::abs(icc[static_cast<size_t>(n)]);
        }
        TruncatedSeries outer(oc, 1.0), inner(icc, 1.0);
        auto outer_maj = TruncatedSeries::from_real(om, 1.0);
        auto inner_maj = TruncatedSeries::from_real(im, 1.0);
        auto comp = compose(outer, inner, 10, 0.7);
        auto comp_maj = compose(outer_maj, inner_maj, 10, 0.7);
        for (int n = 0; n <= 10; ++n)
            CHECK(std::abs(comp.coeff(n)) <= comp_maj.coeff(n).real() + 1e-12);
    }
}

TEST_CASE("differentiate and integrate_from_zero") {
    auto s = TruncatedSeries::from_real({0.0, 1.0, 1.0}, 1.0); // z + z^2
    auto rt = integrate_from_zero(differentiate(s));
    for (int n = 0; n <= 2; ++n)
        CHECK(std::abs(rt.coeff(n) - s.coeff(n)) <= 1e-16);

    auto dg = differentiate(geometric_ones(10));
    for (int n = 1; n <= 10; ++n)
        CHECK(dg.coeff(n - 1).real() == doctest::Approx(static_cast<double>(n)));

    // g' = 0.5 h' with h the concave extremal is 0.5 h coefficient-wise
    auto h = concave_series(0.5, 60);
    auto g = integrate_from_zero(scalar_multiply(0.5, differentiate(h)));
    for (int n = 1; n <= 60; ++n)
        CHECK(std::abs(g.coeff(n) - 0.5 * h.coeff(n)) <= 1e-12 * std::abs(h.coeff(n)));
}

TEST_CASE("differentiate/integrate are mutually inverse on zero-constant series") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> c(16, cplx(0.0));
        for (int n = 1; n < 16; ++n) {
            const double re = static_cast<double>(rng() >> 11) * 0x1p-53 * 2.0 - 1.0;
            c[static_cast<size_t>(n)] = cplx(re, -re * 0.5);
        }
        TruncatedSeries s(c, 1.0);
        auto a = integrate_from_zero(differentiate(s));
        for (int n = 0; n < 16; ++n) CHECK(std::abs(a.coeff(n) - s.coeff(n)) <= 1e-15);
        auto b = differentiate(integrate_from_zero(s));
        for (int n = 0; n < 16; ++n) CHECK(std::abs(b.coeff(n) - s.coeff(n)) <= 1e-15);
    }
}

TEST_CASE("product tail certificate covers the dropped terms") {
    auto a = concave_series(0.6, 48);
    auto b = geometric_ones(48);
    auto short_prod = cauchy_product(a, b, 48);
    auto long_prod = cauchy_product(concave_series(0.6, 200), geometric_ones(200), 200);
    for (double r : {0.1, 0.2, 0.3}) {
        const double vs = majorant_sum(short_prod, r).value;
        const double vl = majorant_sum(long_prod, r).value;
        CHECK(vl - vs >= -1e-14);
        CHECK(vl - vs <= short_prod.tail.at(r));
    }
}

TEST_CASE("pow/exp/divide recurrences against closed forms") {
    // (1+z)^{2.5} around 0
    auto u = TruncatedSeries::from_real({1.0, 1.0}, 1.0);
    auto pw = pow_series(u, 2.5, 8);
    double binom = 1.0;
    for (int n = 0; n <= 8; ++n) {
        CHECK(pw.coeff(n).real() == doctest::Approx(binom).epsilon(1e-13));
        binom *= (2.5 - n) / (n + 1.0);
    }
    // exp(z)
    auto z = TruncatedSeries::from_real({0.0, 1.0}, 1.0);
    auto ez = exp_series(z, 10);
    double fact = 1.0;
    for (int n = 0; n <= 10; ++n) {
        CHECK(ez.coeff(n).real() == doctest::Approx(1.0 / fact).epsilon(1e-13));
        fact *= (n + 1.0);
    }
    // 1/(1-z)
    auto inv = divide(TruncatedSeries::from_real({1.0}, 1.0),
                      TruncatedSeries::from_real({1.0, -1.0}, 1.0), 10);
    for (int n = 0; n <= 10; ++n) CHECK(inv.coeff(n).real() == doctest::Approx(1.0));
}

TEST_CASE("boundary_max_abs finds the circle maximum for positive coefficients") {
    auto s = concave_series(0.5, 80);
    const double r = 0.2;
    const double scan = boundary_max_abs(s, r, 512);
    CHECK(scan == doctest::Approx(majorant_sum(s, r).value).epsilon(1e-12));
}

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <sonnenschein.hpp>

using namespace sonnenschein;

namespace {

Rational q(const char* text) { return Rational::from_string(text); }
ComplexRational c(const char* text) { return ComplexRational::from_string(text); }
KaramataParams karamata(const char* alpha, const char* beta) { return {c(alpha), c(beta)}; }

// The sin^2 constant term as printed, with C(2n, 2r) in place of C(2n, r).
Rational printed_constant_term(unsigned n) {
    Rational sum = binomial(2 * n, n) / Rational(big_int(1) << (2 * n));
    for (unsigned r = 0; r < n; ++r) {
        Rational term = binomial(2 * n, 2 * r) / Rational(big_int(1) << (2 * n - 1));
        sum += (n + r) % 2 == 0 ? term : -term;
    }
    return sum;
}

} // namespace

TEST(KaramataSeries, Examples) {
    EXPECT_EQ(karamata_series(karamata("0", "0"), 4), TruncatedSeries<ComplexRational>::identity(4));
    const auto f = karamata_series(karamata("1/2", "1/3"), 5);
    EXPECT_EQ(f[0], c("1/2"));
    EXPECT_EQ(f[1], c("1/3"));
    // (1 - 1/2 - 1/3)(1/3)^{k-1} + (1/2)(1/3)^k = (1/3)^k
    EXPECT_EQ(f[4], c("1/81"));
}

TEST(KaramataSeries, ValueAtOneIsOne) {
    for (const auto& [a, b] : {std::pair{"1/2", "1/3"}, {"1/4+1/4i", "-1/3"}, {"-2", "1/5"}, {"3/2", "1/2i"}}) {
        const auto f = karamata_series(karamata(a, b), 200);
        EXPECT_NEAR(std::abs(eval_numeric(f, 1.0) - 1.0), 0.0, 1e-9) << a << " " << b;
    }
}

TEST(KaramataParams, RejectsBetaOne) {
    EXPECT_THROW(karamata("1/2", "1"), pole_error);
    EXPECT_NO_THROW(karamata("1", "0"));
    EXPECT_TRUE(karamata("1/2", "1/3").analytic_regime());
    EXPECT_FALSE(karamata("3/2", "0").analytic_regime());
    EXPECT_FALSE(karamata("1/2", "1i").analytic_regime());
}

TEST(KaramataEntry, Examples) {
    const auto p = karamata("1/2", "1/3");
    EXPECT_EQ(karamata_entry(p, 0, 0), ComplexRational{1});
    for (unsigned k = 1; k < 6; ++k) EXPECT_EQ(karamata_entry(p, 0, k), ComplexRational{});
    EXPECT_EQ(karamata_entry(p, 1, 1), c("1/3"));
    const auto shift = karamata("0", "0");
    for (unsigned n = 0; n < 6; ++n)
        for (unsigned k = 0; k < 6; ++k) EXPECT_EQ(karamata_entry(shift, n, k), ComplexRational(n == k ? 1 : 0));
}

TEST(KaramataEntry, MatchesSeriesPowers) {
    for (const auto& [a, b] : {std::pair{"1/2", "1/3"}, {"-1/2", "1/2"}, {"1/2+1/4i", "-1/3"}, {"0", "1/3"}, {"1", "2"}}) {
        const auto p = karamata(a, b);
        EXPECT_EQ(karamata_closed_form_matrix(p, 11, 11), build_matrix(karamata_series(p, 10), 11, p.describe()))
            << a << " " << b;
    }
}

TEST(KaramataMatrix, EulerMeansWhenBetaIsZero) {
    for (const char* a : {"1/2", "2/3", "1/4+1/4i"}) {
        const auto p = karamata(a, "0");
        const auto alpha = p.alpha();
        const auto m = build_matrix(karamata_series(p, 8), 9);
        for (unsigned n = 0; n < 9; ++n)
            for (unsigned k = 0; k < 9; ++k) {
                const ComplexRational expected =
                    k > n ? ComplexRational{}
                          : ComplexRational(binomial(n, k)) * ipow(alpha, n - k) * ipow(ComplexRational{1} - alpha, k);
                EXPECT_EQ(m(n, k), expected) << a << " n=" << n << " k=" << k;
            }
    }
}

TEST(SummabilityMatrix, ShiftMatrixForIdentityGenerator) {
    const auto m = build_matrix(TruncatedSeries<Rational>::identity(3), 4);
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(m(n, k), Rational(n == k ? 1 : 0));
    EXPECT_THROW(build_matrix(TruncatedSeries<Rational>::identity(3), 0), std::invalid_argument);
}

TEST(SummabilityMatrix, RowZeroAndTriangularity) {
    const auto f = karamata_series(karamata("0", "1/2+1/2i"), 7);
    const auto m = build_matrix(f, 8);
    EXPECT_EQ(m(0, 0), ComplexRational{1});
    for (std::size_t k = 1; k < 8; ++k) EXPECT_TRUE(m(0, k).is_zero());
    for (std::size_t n = 0; n < 8; ++n)
        for (std::size_t k = 0; k < n; ++k) EXPECT_TRUE(m(n, k).is_zero()) << n << "," << k;
    for (std::size_t n = 1; n < 8; ++n) {
        const auto power = series_pow(f, n);
        for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(m(n, k), power[k]);
    }
}

TEST(KaramataColumnSums, ClosedFormExamples) {
    const auto shift = karamata_column_sums(karamata("0", "0"), 5);
    for (const auto& v : shift) EXPECT_EQ(v, ComplexRational{1});
    const auto sums = karamata_column_sums(karamata("1/2", "1/3"), 4);
    EXPECT_EQ(sums[0], ComplexRational{2});
    for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ(sums[k], c("4/3"));
    EXPECT_THROW(karamata_column_sums(karamata("1", "0"), 3), pole_error);
}

TEST(KaramataColumnSums, AgreeWithGeometricInverse) {
    for (const auto& [a, b] : {std::pair{"1/2", "1/3"}, {"1/4+1/4i", "-1/2"}, {"5", "7"}, {"-3i", "0"}}) {
        const auto p = karamata(a, b);
        EXPECT_EQ(karamata_column_sums(p, 30), column_sums_via_series(karamata_series(p, 29))) << a << " " << b;
    }
}

TEST(ColumnSumsViaSeries, IdentityGeneratorGivesOnes) {
    const auto sums = column_sums_via_series(TruncatedSeries<Rational>::identity(5));
    for (const auto& v : sums) EXPECT_EQ(v, Rational{1});
    EXPECT_THROW(column_sums_via_series(TruncatedSeries<Rational>::one(3)), pole_error);
    EXPECT_TRUE(constant_term_in_unit_disk(TruncatedSeries<Rational>::identity(2)));
    EXPECT_FALSE(constant_term_in_unit_disk(TruncatedSeries<Rational>::constant(Rational(3) / 2, 2)));
}

TEST(Sin2Series, Coefficients) {
    const auto h = sin2_series(8);
    EXPECT_TRUE(h[0].is_zero());
    EXPECT_EQ(h[2], PiGradedValue(q("1/4"), 2));
    EXPECT_EQ(h[4], PiGradedValue(q("-1/48"), 4));
    EXPECT_EQ(h[6], PiGradedValue(q("1/1440"), 6));
    for (std::size_t j = 1; j <= 8; j += 2) EXPECT_TRUE(h[j].is_zero());
    for (double z : {0.1, 0.3, -0.45}) {
        const double exact = std::pow(std::sin(std::numbers::pi * z / 2), 2);
        EXPECT_NEAR(eval_numeric(sin2_series(40), z).real(), exact, 1e-13) << z;
    }
}

TEST(Sin2Entry, Examples) {
    EXPECT_EQ(sin2_entry_closed_form(1, 2), PiGradedValue(q("1/4"), 2));
    EXPECT_EQ(sin2_entry_closed_form(2, 4), PiGradedValue(q("1/16"), 4));
    EXPECT_EQ(sin2_entry_closed_form(0, 0), PiGradedValue(1));
    EXPECT_TRUE(sin2_entry_closed_form(0, 4).is_zero());
    EXPECT_TRUE(sin2_entry_closed_form(3, 5).is_zero());
    for (unsigned n = 1; n <= 12; ++n) EXPECT_TRUE(sin2_entry_closed_form(n, 0).is_zero()) << n;
}

TEST(Sin2Entry, MatchesSeriesPowers) {
    const auto m = build_matrix(sin2_series(24), 13);
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned j = 0; j <= 24; ++j) EXPECT_EQ(sin2_entry_closed_form(n, j), m(n, j)) << n << "," << j;
}

TEST(Sin2Entry, PrintedBinomialVariantBreaksConstantTerm) {
    EXPECT_EQ(printed_constant_term(2), q("-1/4"));
    EXPECT_NE(printed_constant_term(2), sin2_entry_closed_form(2, 0).coefficient());
}

TEST(Sin2Entry, GradeHomogeneity) {
    const auto h = sin2_series(20);
    for (unsigned n = 0; n <= 10; ++n) {
        const auto power = series_pow(h, n);
        for (unsigned j = 0; j <= 20; ++j)
            if (!power[j].is_zero()) {
                EXPECT_EQ(power[j].grade(), j);
            }
    }
    const auto g = geom_inverse(h);
    for (unsigned j = 0; j <= 20; ++j)
        if (!g[j].is_zero()) {
            EXPECT_EQ(g[j].grade(), j);
        }
}

TEST(Sec2ColumnSums, Examples) {
    const auto sums = sec2_column_sums(3);
    EXPECT_EQ(sums[0], PiGradedValue(1));
    EXPECT_EQ(sums[1], PiGradedValue(q("1/4"), 2));
    // sec^2 x = 1 + x^2 + 2x^4/3 + ..., so the z^4 term is (2/3)(pi/2)^4 = pi^4/24.
    EXPECT_EQ(sums[2], PiGradedValue(q("1/24"), 4));
    const auto by_column = sec2_column_sums_by_column(7);
    for (std::size_t k = 1; k < 7; k += 2) EXPECT_TRUE(by_column[k].is_zero());
    EXPECT_EQ(by_column[4], sums[2]);
}

TEST(Sec2ColumnSums, AgreeWithGeometricInverseAndNumerics) {
    const auto series = column_sums_via_series(sin2_series(30));
    EXPECT_EQ(sec2_column_sums_by_column(31), series);
    // sec^2(pi z / 2) at z = 0.3 from the truncated series
    const double exact = 1.0 / std::pow(std::cos(std::numbers::pi * 0.3 / 2), 2);
    double approx = 0.0;
    for (std::size_t k = 0; k < series.size(); ++k) approx += series[k].to_double() * std::pow(0.3, k);
    EXPECT_NEAR(approx, exact, 1e-12);
}

TEST(Verify, ShiftMatrixIsExact) {
    const auto m = build_matrix(TruncatedSeries<Rational>::identity(4), 10);
    const std::vector<Rational> ones(5, Rational{1});
    const auto report = verify_column_sums(m, ones, 1e-9);
    EXPECT_TRUE(report.all_converged());
    for (const auto& col : report.columns) EXPECT_EQ(col.deviation, 0.0);
}

TEST(Verify, KaramataConvergesInsideUnitDisk) {
    const auto p = karamata("1/2", "1/3");
    const auto m = build_matrix(to_numeric(karamata_series(p, 19)), 2000);
    const auto report = verify_column_sums(m, karamata_column_sums(p, 20), 1e-9);
    EXPECT_TRUE(report.all_converged()) << report.max_deviation();
    EXPECT_EQ(report.columns.size(), 20U);
}

TEST(Verify, KaramataDivergesOutsideUnitDisk) {
    const auto p = karamata("3/2", "0");
    const auto m = build_matrix(to_numeric(karamata_series(p, 4)), 100);
    const auto report = verify_column_sums(m, karamata_column_sums(p, 5), 1e-9);
    EXPECT_FALSE(report.all_converged());
    for (const auto& col : report.columns) EXPECT_FALSE(col.converged);
}

TEST(Verify, RejectsShortPrediction) {
    const auto m = build_matrix(TruncatedSeries<Rational>::identity(4), 3);
    const std::vector<Rational> two(2, Rational{1});
    EXPECT_THROW(verify_column_sums(m, two, 1e-9), std::invalid_argument);
}

TEST(Transform, UnitImpulseGivesFirstColumn) {
    const auto m = build_matrix(karamata_series(karamata("1/2", "1/3"), 6), 7);
    std::vector<std::complex<double>> e0(7);
    e0[0] = 1.0;
    const auto t = transform_sequence(m, std::span<const std::complex<double>>(e0));
    for (std::size_t n = 0; n < 7; ++n) EXPECT_EQ(t[n], to_complex(m(n, 0)));
}

TEST(Transform, ShiftMatrixReproducesSequence) {
    const auto m = build_matrix(TruncatedSeries<Rational>::identity(4), 5);
    const std::vector<std::complex<double>> s{3.0, -1.0, 0.5, 2.0, 7.0, 9.0};
    const auto t = transform_sequence(m, std::span<const std::complex<double>>(s));
    for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(t[n], s[n]);
}

TEST(Transform, RowSumsAreOne) {
    const auto m = build_matrix(to_numeric(karamata_series(karamata("1/2", "1/3"), 200)), 51);
    const std::vector<std::complex<double>> ones(201, 1.0);
    for (const auto& t : transform_sequence(m, std::span<const std::complex<double>>(ones)))
        EXPECT_NEAR(std::abs(t - 1.0), 0.0, 1e-6);
}

TEST(Transform, TruncationLeavesRowMassBehind) {
    // f^n has a pole of order n at 1/beta; with alpha = 1/3, beta = -1/2 the
    // coefficients past z^200 of f^50 are still of order one.
    const auto m = build_matrix(to_numeric(karamata_series(karamata("1/3", "-1/2"), 200)), 51);
    const std::vector<std::complex<double>> ones(201, 1.0);
    const auto t = transform_sequence(m, std::span<const std::complex<double>>(ones));
    EXPECT_NEAR(std::abs(t[5] - 1.0), 0.0, 1e-9);
    EXPECT_GT(std::abs(t[50] - 1.0), 1e-6);
}

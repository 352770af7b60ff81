#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "comfort/error.hpp"
#include "comfort/signal.hpp"
#include "test_support.hpp"

using namespace comfort;
using comfort::testing::gaussian_samples;
using comfort::testing::max_abs;
using comfort::testing::sine_samples;
using comfort::testing::tone_amplitude;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no comfort::Error thrown";
    return ErrorKind::Io;
}

// Base of a peak on one side: the lowest sample reachable without passing a
// strictly higher one. Quadratic, written independently of the library walk.
double side_base(std::span<const double> x, std::size_t p, int dir) {
    double base = x[p];
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (dir < 0 ? k > p : k < p) continue;
        const std::size_t lo = std::min(k, p);
        const std::size_t hi = std::max(k, p);
        const double top = *std::max_element(x.begin() + lo, x.begin() + hi + 1);
        if (top <= x[p]) base = std::min(base, x[k]);
    }
    return base;
}

double oracle_prominence(std::span<const double> x, std::size_t p) {
    return x[p] - std::max(side_base(x, p, -1), side_base(x, p, +1));
}

}  // namespace

TEST(LowpassTaps, LengthIsSmallestOddCoveringTransition) {
    // 3.3 * 250 / (0.25 * 25) = 132 -> 133
    EXPECT_EQ(lowpass_taps(25.0, 250.0).size(), 133u);
    // 3.3 * 32 / (0.25 * 1) = 422.4 -> 423
    EXPECT_EQ(lowpass_taps(1.0, 32.0).size(), 423u);
    // 3.3 * 30 / (0.25 * 3) = 132 -> 133
    EXPECT_EQ(lowpass_taps(3.0, 30.0).size(), 133u);
}

TEST(LowpassTaps, SymmetricWithUnitDcGain) {
    const auto taps = lowpass_taps(25.0, 250.0);
    EXPECT_NEAR(std::accumulate(taps.begin(), taps.end(), 0.0), 1.0, 1e-14);
    for (std::size_t i = 0; i < taps.size(); ++i) {
        EXPECT_DOUBLE_EQ(taps[i], taps[taps.size() - 1 - i]);
    }
}

TEST(LowpassTaps, RejectsCutoffOutsideOpenNyquistInterval) {
    EXPECT_EQ(kind_of([] { lowpass_taps(0.0, 250.0); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { lowpass_taps(-1.0, 250.0); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { lowpass_taps(125.0, 250.0); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { lowpass_taps(200.0, 250.0); }), ErrorKind::InvalidParameter);
}

TEST(LowPass, ConstantPassesUnchanged) {
    const TimeSeries x(std::vector<double>(1000, 3.25), 250.0);
    const auto y = low_pass(x, 25.0);
    for (double v : y.samples()) EXPECT_NEAR(v, 3.25, 1e-12);
}

TEST(LowPass, PassbandToneKeepsAmplitude) {
    const double fs = 250.0;
    const TimeSeries x(sine_samples(5.0, fs, 2500), fs);  // 0.2 x cutoff
    const auto y = low_pass(x, 25.0);
    const double amp = tone_amplitude(y.samples(), 5.0, fs, 500, 1500);
    EXPECT_NEAR(amp, 1.0, 0.01);
}

TEST(LowPass, StopbandToneIsAttenuated) {
    const double fs = 250.0;
    const auto x = sine_samples(100.0, fs, 2500);  // 4 x cutoff
    const auto y = low_pass(TimeSeries(x, fs), 25.0);
    double sum = 0.0;
    for (std::size_t i = 200; i < 2300; ++i) sum += y[i] * y[i];
    const double rms = std::sqrt(sum / 2100.0);
    EXPECT_LT(rms, 0.05 * std::sqrt(0.5));
}

TEST(LowPass, MixedTonesKeepOnlyPassband) {
    const double fs = 250.0;
    auto x = sine_samples(3.0, fs, 5000, 2.0);
    const auto hf = sine_samples(80.0, fs, 5000, 1.5);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += hf[i];
    const auto y = low_pass(TimeSeries(x, fs), 25.0);
    EXPECT_NEAR(tone_amplitude(y.samples(), 3.0, fs, 1000, 3000), 2.0, 0.02);
    EXPECT_LT(tone_amplitude(y.samples(), 80.0, fs, 1000, 3000), 0.01);
}

TEST(LowPass, ZeroPhaseKeepsPeakLocation) {
    const double fs = 250.0;
    std::vector<double> x(1000, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = (static_cast<double>(i) - 500.0) / 10.0;
        x[i] = std::exp(-d * d);
    }
    const auto y = low_pass(TimeSeries(x, fs), 25.0);
    const auto it = std::max_element(y.samples().begin(), y.samples().end());
    EXPECT_EQ(it - y.samples().begin(), 500);
}

TEST(LowPass, ShortSignalIsTooShort) {
    const TimeSeries x(std::vector<double>(100, 1.0), 250.0);
    EXPECT_EQ(kind_of([&] { low_pass(x, 25.0); }), ErrorKind::TooShort);
}

TEST(LowPass, EdgesReflectWithoutRepeatingEdgeSample) {
    const auto x = gaussian_samples(400, 5);
    const auto y = low_pass(TimeSeries(x, 250.0), 25.0);
    const auto taps = lowpass_taps(25.0, 250.0);
    const auto half = static_cast<long>(taps.size() / 2);
    const long n = static_cast<long>(x.size());
    for (long i : {0L, 1L, 17L, n - 1, n - 2}) {
        double expected = 0.0;
        for (long k = 0; k < static_cast<long>(taps.size()); ++k) {
            long j = i - half + k;
            if (j < 0) j = -j;
            if (j >= n) j = 2 * (n - 1) - j;
            expected += taps[k] * x[j];
        }
        EXPECT_NEAR(y[i], expected, 1e-12) << "i " << i;
    }
}

TEST(LowPassProperty, Linearity) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto xs = gaussian_samples(1200, 100 + trial);
        const auto ys = gaussian_samples(1200, 500 + trial, 3.0);
        const double a = coef(rng);
        const double b = coef(rng);
        std::vector<double> combo(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) combo[i] = a * xs[i] + b * ys[i];

        const auto fx = low_pass(TimeSeries(xs, 250.0), 25.0);
        const auto fy = low_pass(TimeSeries(ys, 250.0), 25.0);
        const auto fc = low_pass(TimeSeries(combo, 250.0), 25.0);
        const double scale = std::max(1.0, max_abs(fc.samples()));
        for (std::size_t i = 0; i < combo.size(); ++i) {
            ASSERT_NEAR(fc[i], a * fx[i] + b * fy[i], 1e-9 * scale) << "trial " << trial << " i " << i;
        }
    }
}

TEST(LowPassProperty, ShiftEquivarianceAwayFromEdges) {
    const auto x = gaussian_samples(3000, 11);
    const std::size_t shift = 37;
    const std::vector<double> shifted(x.begin() + shift, x.end());
    const auto fx = low_pass(TimeSeries(x, 250.0), 25.0);
    const auto fs = low_pass(TimeSeries(shifted, 250.0), 25.0);
    const std::size_t half = lowpass_taps(25.0, 250.0).size() / 2;
    for (std::size_t i = half; i + half < fs.size(); ++i) {
        ASSERT_NEAR(fs[i], fx[i + shift], 1e-12);
    }
}

TEST(MovingAverage, SmallWindowByHand) {
    const TimeSeries x({1.0, 2.0, 3.0, 4.0, 5.0}, 10.0);
    const auto y = moving_average(x, 3);
    const std::vector<double> expected{1.5, 2.0, 3.0, 4.0, 4.5};
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_DOUBLE_EQ(y[i], expected[i]);
}

TEST(MovingAverage, ConstantReturnedExactly) {
    const TimeSeries x(std::vector<double>(301, 0.1), 10.0);
    const auto y = moving_average(x, 41);
    for (double v : y.samples()) EXPECT_EQ(v, 0.1);
}

TEST(MovingAverage, UnitWindowIsIdentity) {
    const TimeSeries x(gaussian_samples(50, 3), 10.0);
    EXPECT_EQ(moving_average(x, 1).samples().size(), 50u);
    const auto y = moving_average(x, 1);
    for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(y[i], x[i]);
}

TEST(MovingAverage, RejectsEvenZeroOrOversizedWindow) {
    const TimeSeries x(std::vector<double>(10, 1.0), 10.0);
    EXPECT_EQ(kind_of([&] { moving_average(x, 0); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([&] { moving_average(x, 4); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([&] { moving_average(x, 11); }), ErrorKind::InvalidParameter);
}

TEST(OddWindowSamples, NearestOddWithHalvesUp) {
    EXPECT_EQ(odd_window_samples(0.6, 250.0), 151u);  // 150 -> tie, rounds up
    EXPECT_EQ(odd_window_samples(10.0, 32.0), 321u);  // 320 -> tie
    EXPECT_EQ(odd_window_samples(2.0, 30.0), 61u);
    EXPECT_EQ(odd_window_samples(1.0, 3.0), 3u);
    EXPECT_EQ(odd_window_samples(1.0, 3.9), 3u);
    EXPECT_EQ(odd_window_samples(1.0, 4.1), 5u);
}

TEST(Detrend, ConstantBecomesZero) {
    const TimeSeries x(std::vector<double>(500, -7.5), 250.0);
    for (double v : detrend(x, 0.6).samples()) EXPECT_EQ(v, 0.0);
}

TEST(Detrend, RemovesSlowRampAgainstLeastSquaresOracle) {
    const double fs = 32.0;
    const std::size_t n = 3840;
    auto x = sine_samples(0.25, fs, n);
    for (std::size_t i = 0; i < n; ++i) x[i] += 0.01 * static_cast<double>(i);
    const auto y = detrend(TimeSeries(x, fs), 10.0);

    // Least-squares slope of the output against time, away from the edges.
    const std::size_t lo = 200;
    const std::size_t hi = n - 200;
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double t = static_cast<double>(i);
        st += t;
        sy += y[i];
        stt += t * t;
        sty += t * y[i];
    }
    const double m = static_cast<double>(hi - lo);
    const double slope = (m * sty - st * sy) / (m * stt - st * st);
    EXPECT_LT(std::abs(slope), 0.01 * 0.01);
    // Boxcar response of the 321-sample baseline at the tone frequency.
    const double w = 321.0;
    const double phi = std::numbers::pi * 0.25 / fs;
    const double boxcar = std::sin(w * phi) / (w * std::sin(phi));
    EXPECT_NEAR(tone_amplitude(y.samples(), 0.25, fs, 640, 2560), 1.0 - boxcar, 0.01);
}

TEST(Detrend, ZeroStaysZero) {
    const TimeSeries x(std::vector<double>(200, 0.0), 32.0);
    for (double v : detrend(x, 2.0).samples()) EXPECT_EQ(v, 0.0);
}

TEST(DetrendProperty, IdempotentOnBaselineFreeSignal) {
    // 107 samples per period: the 321-sample baseline window spans exactly
    // three periods, so the interior baseline of the sinusoid vanishes.
    const double fs = 32.0;
    const auto x = sine_samples(fs / 107.0, fs, 4000, 2.0, 0.3);
    const auto once = detrend(TimeSeries(x, fs), 10.0);
    const auto twice = detrend(once, 10.0);
    const std::size_t edge = 321;  // two half-windows
    for (std::size_t i = edge; i + edge < x.size(); ++i) {
        ASSERT_NEAR(twice[i], once[i], 1e-6 * std::max(1.0, std::abs(once[i])));
    }
}

TEST(Detrend, RejectsTinyOrOversizedWindow) {
    const TimeSeries x(std::vector<double>(100, 1.0), 10.0);
    EXPECT_EQ(kind_of([&] { detrend(x, 0.2); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([&] { detrend(x, 20.0); }), ErrorKind::InvalidParameter);
}

TEST(FindPeaks, SingleTriangle) {
    const TimeSeries x({0.0, 1.0, 2.0, 3.0, 2.0, 1.0, 0.0}, 1.0);
    const auto p = find_peaks(x, 0.0, 0.0);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.indices[0], 3u);
    EXPECT_DOUBLE_EQ(peak_prominence(x, 3), 3.0);
}

TEST(FindPeaks, SinusoidPeaksAtClosedFormPositions) {
    // sin peaks at t = (k + 1/4) / f; with fs/f = 100 samples they land on
    // integer indices 25 + 100 k.
    const TimeSeries x(sine_samples(1.0, 100.0, 1000), 100.0);
    const auto p = find_peaks(x, 0.5, 0.5);
    ASSERT_EQ(p.size(), 10u);
    for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(p.indices[k], 25 + 100 * k);
}

TEST(FindPeaks, EndpointsAreNeverPeaks) {
    const TimeSeries x({5.0, 1.0, 2.0, 1.0, 6.0}, 1.0);
    const auto p = find_peaks(x, 0.0, 0.0);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.indices[0], 2u);
}

TEST(FindPeaks, PlateauReportedAtLeftmostSample) {
    const TimeSeries x({0.0, 1.0, 4.0, 4.0, 4.0, 1.0, 0.0}, 1.0);
    const auto p = find_peaks(x, 0.0, 0.0);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.indices[0], 2u);
}

TEST(FindPeaks, ShoulderIsNotAPeak) {
    const TimeSeries x({0.0, 2.0, 2.0, 3.0, 1.0}, 1.0);
    const auto p = find_peaks(x, 0.0, 0.0);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.indices[0], 3u);
}

TEST(FindPeaks, ConstantAndTinySignalsHaveNone) {
    EXPECT_TRUE(find_peaks(TimeSeries(std::vector<double>(50, 2.0), 1.0), 0.0, 0.0).empty());
    EXPECT_TRUE(find_peaks(TimeSeries({1.0, 2.0}, 1.0), 0.0, 0.0).empty());
}

TEST(FindPeaks, DistanceKeepsMoreProminentNeighbour) {
    const TimeSeries x({0.0, 3.0, 0.0, 5.0, 0.0, 0.0, 0.0, 2.0, 0.0}, 1.0);
    const auto p = find_peaks(x, 3.0, 0.0);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p.indices[0], 3u);
    EXPECT_EQ(p.indices[1], 7u);
}

TEST(FindPeaks, ProminenceThresholdFiltersRipples) {
    const TimeSeries x({0.0, 5.0, 4.8, 4.9, 4.7, 0.0, 3.0, 0.0}, 1.0);
    const auto all = find_peaks(x, 0.0, 0.0);
    ASSERT_EQ(all.size(), 3u);
    const auto strong = find_peaks(x, 0.0, 1.0);
    ASSERT_EQ(strong.size(), 2u);
    EXPECT_EQ(strong.indices[0], 1u);
    EXPECT_EQ(strong.indices[1], 6u);
    EXPECT_NEAR(peak_prominence(x, 3), 0.1, 1e-12);
    EXPECT_DOUBLE_EQ(peak_prominence(x, 6), 3.0);
}

TEST(FindPeaks, RejectsNegativeArguments) {
    const TimeSeries x({0.0, 1.0, 0.0}, 1.0);
    EXPECT_EQ(kind_of([&] { find_peaks(x, -1.0, 0.0); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([&] { find_peaks(x, 0.0, -1.0); }), ErrorKind::InvalidParameter);
}

TEST(FindPeaksProperty, ProminenceMatchesQuadraticOracle) {
    for (int trial = 0; trial < 30; ++trial) {
        std::mt19937_64 rng(900 + trial);
        std::uniform_int_distribution<int> level(0, 6);
        std::vector<double> x(60);
        for (auto& v : x) v = level(rng);
        const TimeSeries ts(x, 1.0);
        const auto peaks = find_peaks(ts, 0.0, 0.0);
        for (auto p : peaks.indices) {
            ASSERT_DOUBLE_EQ(peak_prominence(ts, p), oracle_prominence(x, p)) << "trial " << trial;
        }
    }
}

TEST(FindPeaksProperty, PeakListInvariants) {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> dist_s(0.0, 0.5);
    std::uniform_real_distribution<double> prom(0.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = gaussian_samples(400, 10'000 + trial);
        const TimeSeries ts(x, 100.0);
        const double d = dist_s(rng);
        const double mp = prom(rng);
        const auto p = find_peaks(ts, d, mp);
        ASSERT_TRUE(p.valid());
        EXPECT_EQ(p.source_length, x.size());
        for (std::size_t k = 0; k < p.size(); ++k) {
            const auto i = p.indices[k];
            ASSERT_GT(i, 0u);
            ASSERT_LT(i + 1, x.size());
            ASSERT_GT(x[i], x[i - 1]);
            ASSERT_GE(x[i], x[i + 1]);
            ASSERT_GE(peak_prominence(ts, i), mp);
            if (k > 0) ASSERT_GE(static_cast<double>(i - p.indices[k - 1]), d * 100.0);
        }
    }
}

TEST(FindPeaksProperty, OffsetAndPositiveScaleInvariant) {
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = gaussian_samples(500, 77 + trial);
        const auto base = find_peaks(TimeSeries(x, 50.0), 0.1, 0.5);
        std::vector<double> moved(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) moved[i] = 4.0 * x[i] + 10.0;
        const auto other = find_peaks(TimeSeries(moved, 50.0), 0.1, 2.0);
        EXPECT_EQ(base.indices, other.indices);
    }
}

TEST(PeakList, ValidRejectsBrokenLists) {
    PeakList p;
    p.source_length = 10;
    p.min_distance_samples = 2.0;
    p.indices = {1, 4, 8};
    EXPECT_TRUE(p.valid());
    p.indices = {1, 2};
    EXPECT_FALSE(p.valid());
    p.indices = {4, 1};
    EXPECT_FALSE(p.valid());
    p.indices = {3, 10};
    EXPECT_FALSE(p.valid());
}

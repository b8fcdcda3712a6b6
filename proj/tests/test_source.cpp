#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "recon/channel.hpp"
#include "recon/rng.hpp"
#include "recon/source.hpp"

using namespace recon;

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// one-sample Kolmogorov-Smirnov statistic against the standard normal
double ks_statistic(std::vector<double> sample) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = normal_cdf(sample[i]);
        d = std::max(d, std::max((i + 1) / n - f, f - i / n));
    }
    return d;
}

} // namespace

TEST_CASE("generate_batch is reproducible and seed-sensitive") {
    const auto b1 = generate_batch(1000, 0.5, 42);
    const auto b2 = generate_batch(1000, 0.5, 42);
    CHECK(b1.a == b2.a);
    CHECK(b1.b == b2.b);
    const auto b3 = generate_batch(1000, 0.5, 43);
    CHECK(b1.b != b3.b);
    CHECK_THROWS_AS(generate_batch(0, 0.5, 1), std::domain_error);
    CHECK_THROWS_AS(generate_batch(10, 0.0, 1), std::domain_error);
}

TEST_CASE("noiseless limit: sign of b equals a") {
    const auto batch = generate_batch(10'000, 1e8, 7);
    for (std::size_t i = 0; i < batch.size(); ++i)
        CHECK((batch.b[i] >= 0 ? 1 : -1) == batch.a[i]);
}

TEST_CASE("empirical sign-mismatch rate matches the analytic crossover") {
    for (double snr : {0.001, 0.17, 1.0, 4.0}) {
        const std::size_t n = 1'000'000;
        const auto batch = generate_batch(n, snr, 11);
        std::size_t mismatch = 0;
        for (std::size_t i = 0; i < n; ++i)
            mismatch += (batch.b[i] >= 0 ? 1 : -1) != batch.a[i];
        const double p = crossover_from_snr(snr);
        const double se = std::sqrt(p * (1.0 - p) / n);
        CHECK(std::fabs(static_cast<double>(mismatch) / n - p) < 4.0 * se);
    }
}

TEST_CASE("hd reduction mapping, including the b = 0 tie-break") {
    ModulationBatch batch;
    batch.a = {1, 1, -1};
    batch.b = {0.3, -0.2, 0.0};
    batch.snr = 1.0;
    const HdPairs pairs = reduce_hd(batch);
    CHECK(pairs.x == Bits{0, 1, 0});
    CHECK(pairs.y == Bits{0, 0, 1});
}

TEST_CASE("sd reduction mapping and the Z identity") {
    ModulationBatch batch;
    batch.a = {1, -1};
    batch.b = {-0.5, -1.3};
    batch.snr = 1.0;
    const SdTriple trip = reduce_sd(batch);
    CHECK(trip.x[0] == -1);
    CHECK(trip.side_info[0] == doctest::Approx(0.5));
    CHECK(trip.y[0] == doctest::Approx(0.5));
    CHECK(trip.x[1] == -1);
    CHECK(trip.side_info[1] == doctest::Approx(1.3));
    CHECK(trip.y[1] == doctest::Approx(-1.3)); // y = |b| * a
    // Z = Y - X = (a b / |b|) (b - a), checked entry-wise
    for (int i = 0; i < 2; ++i) {
        const double z_raw = batch.b[i] - batch.a[i];
        const double expected =
            batch.a[i] * batch.b[i] / std::fabs(batch.b[i]) * z_raw;
        CHECK(trip.y[i] - trip.x[i] == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("sd reduction invariants x * side == b and y == side * a") {
    const auto batch = generate_batch(10'000, 0.7, 3);
    const SdTriple trip = reduce_sd(batch);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        CHECK(trip.x[i] * trip.side_info[i] ==
              doctest::Approx(batch.b[i]).epsilon(1e-13));
        CHECK(trip.y[i] == trip.side_info[i] * batch.a[i]);
    }
}

TEST_CASE("sd noise is Gaussian of variance 1/snr, independent of X") {
    const double snr = 0.5;
    const std::size_t n = 1'000'000;
    const auto batch = generate_batch(n, snr, 17);
    const SdTriple trip = reduce_sd(batch);

    double sum = 0.0, sum_sq = 0.0, cross = 0.0;
    double mean_pos = 0.0, mean_neg = 0.0;
    std::size_t n_pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = trip.y[i] - trip.x[i];
        sum += z;
        sum_sq += z * z;
        cross += z * trip.x[i];
        if (trip.x[i] == 1) {
            mean_pos += z;
            ++n_pos;
        } else {
            mean_neg += z;
        }
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(var == doctest::Approx(1.0 / snr).epsilon(0.005));

    const double corr = (cross / n) / std::sqrt(var); // X has unit variance
    CHECK(std::fabs(corr) < 3.0 / std::sqrt(static_cast<double>(n)));

    mean_pos /= n_pos;
    mean_neg /= (n - n_pos);
    CHECK(std::fabs(mean_pos - mean_neg) <
          4.0 / std::sqrt(snr * n / 2.0));

    // X uniformity
    CHECK(std::fabs(static_cast<double>(n_pos) / n - 0.5) <
          4.0 / (2.0 * std::sqrt(static_cast<double>(n))));
}

TEST_CASE("sd noise passes a KS test against the standard normal") {
    const double snr = 0.5;
    const std::size_t n = 100'000;
    const auto batch = generate_batch(n, snr, 23);
    const SdTriple trip = reduce_sd(batch);
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = std::sqrt(snr) * (trip.y[i] - trip.x[i]);
    // critical value at the 1e-3 significance level
    CHECK(ks_statistic(std::move(z)) < 1.9495 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("batch file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "recon_batch_test.bin";
    const auto batch = generate_batch(513, 0.125, 99);
    save_batch(batch, path);
    const auto loaded = load_batch(path);
    CHECK(loaded.a == batch.a);
    CHECK(loaded.b == batch.b);
    CHECK(loaded.snr == batch.snr);
    CHECK(loaded.seed == batch.seed);

    // truncated file
    std::ofstream trunc(path, std::ios::binary | std::ios::trunc);
    trunc << "RBAT123";
    trunc.close();
    CHECK_THROWS_AS(load_batch(path), std::runtime_error);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_batch(path), std::runtime_error);
}

TEST_CASE("rng: inverse normal CDF round-trips through the normal CDF") {
    for (double u : {1e-9, 1e-4, 0.025, 0.31, 0.5, 0.77, 0.975, 1.0 - 1e-6}) {
        const double z = inverse_normal_cdf(u);
        CHECK(normal_cdf(z) == doctest::Approx(u).epsilon(1e-12));
    }
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), std::domain_error);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), std::domain_error);
}

TEST_CASE("rng substreams are independent and reproducible") {
    Rng a(5, 0), b(5, 1), a2(5, 0);
    bool all_equal = true;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        all_equal = all_equal && va == b.next_u64();
        CHECK(va == a2.next_u64());
    }
    CHECK_FALSE(all_equal);
    CHECK(derive_seed(5, 1) != derive_seed(5, 2));
    CHECK(derive_seed(5, 1) == derive_seed(5, 1));
}

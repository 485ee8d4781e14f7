#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <vector>

#include "qlandau/dynamics.hpp"
#include "qlandau/field2d.hpp"
#include "qlandau/units.hpp"

using namespace qlandau;

namespace {

// alpha gamma = 1/12 with kx0 = 6 on a 2 pi torus: omega_c = 1, l = 1.
const PhysParams P = natural_params(1.0 / 12.0);

Grid2D base_grid() { return Grid2D(2.0 * PI, 16, -17.0, 17.0, 256); }

} // namespace

TEST_CASE("initial packet construction") {
    const Grid2D g = base_grid();

    SECTION("normalization and spin routing") {
        const auto fp = initial_packet(g, P, 6.0, 1.0, SpinChoice::Plus);
        CHECK(total_norm(fp) == Catch::Approx(1.0).epsilon(1e-12));
        CHECK(component_norm(fp, -1) == 0.0);
        const auto fm = initial_packet(g, P, 6.0, 1.0, SpinChoice::Minus);
        CHECK(component_norm(fm, +1) == 0.0);
        CHECK(component_norm(fm, -1) == Catch::Approx(1.0).epsilon(1e-12));
        const auto fs = initial_packet(g, P, 6.0, 1.0, SpinChoice::Superposition);
        CHECK(component_norm(fs, +1) == Catch::Approx(0.5).epsilon(1e-12));
        CHECK(component_norm(fs, -1) == Catch::Approx(0.5).epsilon(1e-12));
        CHECK(total_norm(fs) == Catch::Approx(1.0).epsilon(1e-12));
    }
    SECTION("Gaussian width and center") {
        const auto f = initial_packet(g, P, 6.0, 1.0, SpinChoice::Plus);
        // |psi|^2 ~ exp(-y^2 / 2 w^2): rms = w
        CHECK(rms_y(f, +1) == Catch::Approx(1.0).epsilon(1e-8));
        CHECK(mean_y(f, +1) == Catch::Approx(0.0).margin(1e-10));
        const auto fc = initial_packet(g, P, 6.0, 1.5, SpinChoice::Plus, 3.0);
        CHECK(mean_y(fc, +1) == Catch::Approx(3.0).epsilon(1e-8));
    }
    SECTION("momentum content is the single requested mode") {
        const auto f = initial_packet(g, P, 6.0, 1.0, SpinChoice::Plus);
        const auto pw = kx_power(f, +1);
        double s = 0.0;
        for (double v : pw) s += v;
        CHECK(pw[6] / s == Catch::Approx(1.0).epsilon(1e-12));
    }
    SECTION("off-lattice kx0 is refused, naming the neighbors") {
        CHECK_THROWS_WITH(initial_packet(g, P, 6.5, 1.0, SpinChoice::Plus),
                          Catch::Matchers::ContainsSubstring("6") &&
                              Catch::Matchers::ContainsSubstring("7"));
    }
    SECTION("packet must fit the y range") {
        CHECK_THROWS_AS(initial_packet(g, P, 6.0, 1.0, SpinChoice::Plus, 15.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(initial_packet(g, P, 6.0, 6.0, SpinChoice::Plus),
                        std::invalid_argument);
    }
}

TEST_CASE("survival window integration") {
    const Grid2D g = base_grid();
    const auto f = initial_packet(g, P, 6.0, 1.0, SpinChoice::Superposition);

    SECTION("wide window captures the whole packet, split equally") {
        const auto s = survival_probability(f, 10.0);
        CHECK(s.first == Catch::Approx(0.5).epsilon(1e-10));
        CHECK(s.second == Catch::Approx(0.5).epsilon(1e-10));
    }
    SECTION("matches the Gaussian error integral") {
        // fine y-grid: the trapezoid rule on the 256-point grid is only ~1e-3
        const Grid2D gf(2.0 * PI, 8, -17.0, 17.0, 2048);
        const auto fp = initial_packet(gf, P, 6.0, 1.0, SpinChoice::Plus);
        // P(|y| < a) for density ~ exp(-y^2/2) is erf(a/sqrt(2))
        for (double a : {0.7, 1.3, 2.9}) {
            const auto s = survival_probability(fp, a);
            CHECK(s.first == Catch::Approx(std::erf(a / std::sqrt(2.0))).margin(2e-4));
        }
    }
    SECTION("window edges are validated") {
        CHECK_THROWS_AS(survival_probability(f, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(survival_probability(f, 17.0), std::invalid_argument);
        CHECK_THROWS_AS(survival_probability(f, -2.0), std::invalid_argument);
    }
}

TEST_CASE("confined component stays in the trap for ten periods") {
    const Grid2D g = base_grid();
    // channel ground state: density rms = l / sqrt(2)
    const double w0 = std::sqrt(0.5);
    const auto f0 = initial_packet(g, P, 6.0, w0, SpinChoice::Plus);
    EvolveOptions opt;
    opt.y_trap = 5.0;
    opt.report_stride = 200;
    const int n_steps = 12600; // t = 63.0, a bit over ten periods of 2 pi
    auto [ff, rep] = evolve(f0, P, 5e-3, n_steps, opt);
    CHECK(rep.survival_plus.front() == Catch::Approx(1.0).margin(1e-6));
    CHECK(rep.survival_plus.back() >= 0.99);
    // a stationary state: the width must not breathe
    for (double w : rep.width_plus) CHECK(w == Catch::Approx(w0).margin(5e-3));
    CHECK(ff.time == Catch::Approx(63.0).margin(1e-8));
}

TEST_CASE("unconfined component escapes by t = 3") {
    const Grid2D g = base_grid();
    const auto f0 = initial_packet(g, P, 6.0, std::sqrt(0.5), SpinChoice::Minus);
    EvolveOptions opt;
    opt.y_trap = 5.0;
    opt.report_stride = 100;
    auto [ff, rep] = evolve(f0, P, 5e-3, 600, opt);
    CHECK(rep.survival_minus.back() < 0.5);
    // widths grow monotonically once escape is under way
    const std::size_t half = rep.width_minus.size() / 2;
    for (std::size_t i = half; i + 1 < rep.width_minus.size(); ++i)
        CHECK(rep.width_minus[i + 1] >= rep.width_minus[i] - 1e-9);
    // absorber has eaten part of the norm by then
    CHECK(total_norm(ff) < 1.0);
}

TEST_CASE("halved step and doubled grid agree on the survival curve") {
    EvolveOptions opt;
    opt.y_trap = 5.0;
    const double t_end = 3.0;

    const Grid2D g1(2.0 * PI, 16, -17.0, 17.0, 256);
    const auto f1 = initial_packet(g1, P, 6.0, std::sqrt(0.5), SpinChoice::Superposition);
    opt.report_stride = 100; // sample every 0.5
    auto [e1, r1] = evolve(f1, P, 5e-3, 600, opt);

    const Grid2D g2(2.0 * PI, 32, -17.0, 17.0, 512);
    const auto f2 = initial_packet(g2, P, 6.0, std::sqrt(0.5), SpinChoice::Superposition);
    opt.report_stride = 200;
    auto [e2, r2] = evolve(f2, P, 2.5e-3, 1200, opt);

    REQUIRE(r1.times.size() == r2.times.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < r1.times.size(); ++i) {
        CHECK(r1.times[i] == Catch::Approx(r2.times[i]).margin(1e-12));
        worst = std::max(worst, std::abs(r1.survival_plus[i] - r2.survival_plus[i]));
        worst = std::max(worst, std::abs(r1.survival_minus[i] - r2.survival_minus[i]));
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("absorber-off evolution is exactly unitary per component") {
    const Grid2D g = base_grid();
    const auto f0 = initial_packet(g, P, 6.0, 1.0, SpinChoice::Superposition);
    EvolveOptions opt;
    opt.absorber = false;
    opt.report_stride = 1000;
    auto [ff, rep] = evolve(f0, P, 1e-4, 10000, opt);
    for (double n : rep.norm_total) CHECK(std::abs(n - 1.0) < 1e-10);
    CHECK(std::abs(component_norm(ff, +1) - 0.5) < 1e-10);
    CHECK(std::abs(component_norm(ff, -1) - 0.5) < 1e-10);
}

TEST_CASE("spill monitor aborts leaking absorber-off runs") {
    const Grid2D g(2.0 * PI, 16, -10.0, 10.0, 128);
    const auto f0 = initial_packet(g, P, 6.0, 1.0, SpinChoice::Minus);
    EvolveOptions opt;
    opt.absorber = false;
    // inverted channel spreads fast; it must hit the guard band well before t = 3
    CHECK_THROWS_AS(evolve(f0, P, 5e-3, 600, opt), std::runtime_error);
}

TEST_CASE("time step guard") {
    const Grid2D g = base_grid();
    const auto f0 = initial_packet(g, P, 6.0, 1.0, SpinChoice::Plus);
    CHECK_THROWS_WITH(evolve(f0, P, 10.0, 10),
                      Catch::Matchers::ContainsSubstring("maximum allowed dt"));
    CHECK_THROWS_AS(evolve(f0, P, -0.1, 10), std::invalid_argument);
    CHECK_THROWS_AS(evolve(f0, P, 1e-3, 0), std::invalid_argument);
}

TEST_CASE("snapshot files carry the grid header and densities") {
    const Grid2D g(2.0 * PI, 32, -8.0, 8.0, 32, BoundaryY::None);
    SpinorField f(g);
    for (int ix = 0; ix < g.n_x; ++ix)
        for (int iy = 0; iy < g.n_y; ++iy)
            f.plus[g.idx(ix, iy)] = std::complex<double>(0.25 * ix, 0.5 * iy);
    f.time = 1.25;
    const std::string path = "snapshot_test.bin";
    write_snapshot(f, path);

    std::FILE* fp = std::fopen(path.c_str(), "rb");
    REQUIRE(fp != nullptr);
    char magic[8];
    REQUIRE(std::fread(magic, 1, 8, fp) == 8);
    CHECK(std::memcmp(magic, "QLSNAP1\0", 8) == 0);
    std::int32_t nx = 0, ny = 0;
    REQUIRE(std::fread(&nx, sizeof nx, 1, fp) == 1);
    REQUIRE(std::fread(&ny, sizeof ny, 1, fp) == 1);
    CHECK(nx == 32);
    CHECK(ny == 32);
    double header[4];
    REQUIRE(std::fread(header, sizeof(double), 4, fp) == 4);
    CHECK(header[0] == Catch::Approx(2.0 * PI));
    CHECK(header[1] == -8.0);
    CHECK(header[2] == 8.0);
    CHECK(header[3] == 1.25);
    std::vector<double> dens(f.grid.size());
    REQUIRE(std::fread(dens.data(), sizeof(double), dens.size(), fp) == dens.size());
    CHECK(dens[g.idx(3, 7)] == Catch::Approx(std::norm(f.plus[g.idx(3, 7)])));
    REQUIRE(std::fread(dens.data(), sizeof(double), dens.size(), fp) == dens.size());
    CHECK(dens[g.idx(3, 7)] == 0.0);
    std::fclose(fp);
    std::remove(path.c_str());
}

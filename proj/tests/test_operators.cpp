#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "qlandau/analytic.hpp"
#include "qlandau/field2d.hpp"
#include "qlandau/fields.hpp"
#include "qlandau/fft.hpp"
#include "qlandau/operators.hpp"

using namespace qlandau;
using cplx = std::complex<double>;

namespace {

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// normalized spinor with a Gaussian transverse profile on a couple of torus modes
SpinorField smooth_test_field(const Grid2D& g) {
    SpinorField f(g);
    for (int ix = 0; ix < g.n_x; ++ix) {
        const double x = g.x(ix);
        const cplx mx = std::exp(cplx(0, 2.0 * x)) + 0.4 * std::exp(cplx(0, -3.0 * x));
        for (int iy = 0; iy < g.n_y; ++iy) {
            const double y = g.y(iy);
            f.plus[g.idx(ix, iy)] = mx * std::exp(-0.5 * y * y);
            f.minus[g.idx(ix, iy)] =
                0.7 * std::exp(cplx(0, 1.0 * x)) * y * std::exp(-0.25 * y * y);
        }
    }
    const double n = std::sqrt(total_norm(f));
    for (auto& z : f.plus) z /= n;
    for (auto& z : f.minus) z /= n;
    return f;
}

} // namespace

TEST_CASE("Pauli algebra") {
    const auto sx = pauli_x();
    const auto sy = pauli_y();
    const auto sz = pauli_z();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    CHECK((sx * sx - id).norm() == 0.0);
    CHECK((sy * sy - id).norm() == 0.0);
    CHECK((sz * sz - id).norm() == 0.0);
    CHECK((sx * sy - sy * sx - cplx(0, 2) * sz).norm() < 1e-15);
    CHECK((sx * sy + sy * sx).norm() == 0.0);
    CHECK((sz * sx + sx * sz).norm() == 0.0);
}

TEST_CASE("quadratic field profile and its source") {
    FieldConfig field;
    field.gamma = 3.0;
    CHECK(field.field_y(2.0) == Catch::Approx(12.0));
    CHECK(field.field_y(-2.0) == Catch::Approx(12.0));
    CHECK(field.field_y(0.0) == 0.0);
    // Gauss law in 1D: dE_y/dy = rho / eps0
    const double dy = 1e-6;
    for (double y : {-1.5, 0.2, 4.0}) {
        const double dE = (field.field_y(y + dy) - field.field_y(y - dy)) / (2.0 * dy);
        CHECK(dE == Catch::Approx(field.charge_density(y) / field.eps0).margin(1e-4));
    }
    FieldConfig bad;
    bad.gamma = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("effective gauge field from E x sigma") {
    FieldConfig field;
    field.gamma = 2.0;
    const auto g = effective_gauge(field, 1.5);
    const double e = 2.0 * 1.5 * 1.5;
    CHECK((g.A_x - e * pauli_z()).norm() < 1e-15);
    CHECK((g.A_z + e * pauli_x()).norm() < 1e-15);
    // SU(2)-valued: the two components do not commute
    CHECK((g.A_x * g.A_z - g.A_z * g.A_x).norm() > 1.0);
    // odd under nothing: A(y) = A(-y), the field is even in y
    const auto gm = effective_gauge(field, -1.5);
    CHECK((g.A_x - gm.A_x).norm() == 0.0);
}

TEST_CASE("tridiagonal building block") {
    SECTION("apply") {
        TridiagonalOperator op;
        op.diag = {2.0, 2.0, 2.0};
        op.offdiag = {-1.0, -1.0};
        const auto out = op.apply({1.0, 2.0, 3.0});
        REQUIRE(out.size() == 3);
        CHECK(out[0] == Catch::Approx(0.0).margin(1e-15));
        CHECK(out[1] == Catch::Approx(0.0).margin(1e-15));
        CHECK(out[2] == Catch::Approx(4.0));
        CHECK_THROWS_AS(op.apply({1.0, 2.0}), std::invalid_argument);
    }
    SECTION("Gershgorin bound dominates the Rayleigh quotient") {
        const PhysParams p = natural_params(0.5);
        const Grid1D grid(-8.0, 8.0, 513);
        const auto op = build_effective_1d(p, {1.0, +1}, grid);
        CHECK(op.norm_bound() >= 2.0 / (grid.spacing() * grid.spacing()));
    }
}

TEST_CASE("effective 1D Hamiltonian stencil") {
    const PhysParams p = natural_params(0.5); // omega_c(1) = 1, l = 1
    const Sector s{1.0, +1};
    const Grid1D grid(-8.0, 8.0, 513);
    const auto op = build_effective_1d(p, s, grid);
    const double h = grid.spacing();

    SECTION("matrix entries") {
        REQUIRE(op.diag.size() == 513);
        REQUIRE(op.offdiag.size() == 512);
        CHECK(op.offdiag[17] == Catch::Approx(-0.5 / (h * h)));
        CHECK(op.diag[256] == Catch::Approx(1.0 / (h * h))); // y = 0
        CHECK(op.diag[0] == Catch::Approx(1.0 / (h * h) + 0.5 * 64.0));
    }
    SECTION("Rayleigh quotient of the exact ground state") {
        std::vector<double> v(grid.n_points);
        for (int i = 0; i < grid.n_points; ++i)
            v[i] = hermite_function(0, grid.point(i));
        const auto Hv = op.apply(v);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < grid.n_points; ++i) {
            num += v[i] * Hv[i];
            den += v[i] * v[i];
        }
        CHECK(num / den == Catch::Approx(0.5).margin(2e-4));
    }
    SECTION("inverted and marginal channels are refused") {
        CHECK_THROWS_WITH(build_effective_1d(p, {1.0, -1}, grid),
                          Catch::Matchers::ContainsSubstring("unbounded below"));
        CHECK_THROWS_AS(build_effective_1d(p, {0.0, +1}, grid), std::domain_error);
    }
}

TEST_CASE("potential profile by sector") {
    const PhysParams p = natural_params(0.5);
    const Grid1D grid(-4.0, 4.0, 65);
    const auto vc = potential_profile(p, {1.0, +1}, grid);
    const auto vu = potential_profile(p, {1.0, -1}, grid);
    const auto vm = potential_profile(p, {0.0, +1}, grid);
    for (int i = 0; i < grid.n_points; ++i) {
        const double y = grid.point(i);
        CHECK(vc[i] == Catch::Approx(0.5 * y * y).margin(1e-14));
        CHECK(vu[i] == Catch::Approx(-0.5 * y * y).margin(1e-14));
        CHECK(vm[i] == 0.0);
    }
}

TEST_CASE("Fourier machinery") {
    const Grid2D g(2.0 * PI, 32, -8.0, 8.0, 64, BoundaryY::None);

    SECTION("wavenumber layout") {
        const auto kx = g.kx_values();
        CHECK(kx[0] == 0.0);
        CHECK(kx[1] == Catch::Approx(1.0));
        CHECK(kx[16] == Catch::Approx(-16.0));
        CHECK(kx[31] == Catch::Approx(-1.0));
        const auto ky = g.ky_values();
        CHECK(ky[1] == Catch::Approx(2.0 * PI / 16.0));
    }
    SECTION("round trips restore the field") {
        auto f = smooth_test_field(g);
        const auto ref = f.plus;
        FftPlans plans(g.n_x, g.n_y);
        plans.forward_x(f.plus.data());
        plans.backward_x(f.plus.data());
        CHECK(max_abs_diff(f.plus, ref) < 1e-14);
        plans.forward_y(f.plus.data());
        plans.backward_y(f.plus.data());
        CHECK(max_abs_diff(f.plus, ref) < 1e-14);
    }
    SECTION("p_x is diagonal on a torus mode") {
        SpinorField f(g);
        for (int ix = 0; ix < g.n_x; ++ix)
            for (int iy = 0; iy < g.n_y; ++iy)
                f.plus[g.idx(ix, iy)] = std::exp(cplx(0, 5.0 * g.x(ix)));
        FftPlans plans(g.n_x, g.n_y);
        auto px_psi = f.plus;
        detail::apply_px(g, plans, 1.0, px_psi);
        std::vector<cplx> expect(f.plus.size());
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = 5.0 * f.plus[i];
        CHECK(max_abs_diff(px_psi, expect) < 1e-12);
    }
    SECTION("kinetic term is diagonal on a plane wave") {
        PhysParams p = natural_params();
        const double ky1 = 2.0 * PI / 16.0; // one lattice mode of the y axis
        SpinorField f(g);
        for (int ix = 0; ix < g.n_x; ++ix)
            for (int iy = 0; iy < g.n_y; ++iy)
                f.plus[g.idx(ix, iy)] =
                    std::exp(cplx(0, 3.0 * g.x(ix) + 4.0 * ky1 * g.y(iy)));
        FftPlans plans(g.n_x, g.n_y);
        auto t_psi = f.plus;
        detail::apply_kinetic(g, plans, p, t_psi);
        const double expect = 0.5 * (9.0 + 16.0 * ky1 * ky1);
        double worst = 0.0;
        for (std::size_t i = 0; i < t_psi.size(); ++i)
            worst = std::max(worst, std::abs(t_psi[i] - expect * f.plus[i]));
        CHECK(worst < 1e-11);
    }
}

TEST_CASE("spinor field reductions") {
    const Grid2D g(2.0 * PI, 32, -8.0, 8.0, 64, BoundaryY::None);
    auto f = smooth_test_field(g);

    SECTION("norms split across components and sum to one") {
        CHECK(total_norm(f) == Catch::Approx(1.0).epsilon(1e-12));
        CHECK(component_norm(f, +1) + component_norm(f, -1) ==
              Catch::Approx(total_norm(f)));
    }
    SECTION("y marginal integrates to the component norm") {
        const auto rho = y_marginal(f, +1);
        double s = 0.0;
        for (double r : rho) s += r;
        CHECK(s * g.hy() == Catch::Approx(component_norm(f, +1)).epsilon(1e-12));
    }
    SECTION("moments of symmetric profiles") {
        CHECK(mean_y(f, +1) == Catch::Approx(0.0).margin(1e-12));
        // |psi_+|^2 ~ exp(-y^2): <y^2> = 1/2
        CHECK(rms_y(f, +1) == Catch::Approx(std::sqrt(0.5)).epsilon(1e-6));
    }
    SECTION("kx power localizes on the populated modes") {
        const auto pw = kx_power(f, +1);
        double s = 0.0;
        for (double v : pw) s += v;
        CHECK(s == Catch::Approx(component_norm(f, +1)).epsilon(1e-10));
        // modes 2 and -3 (indices 2 and 29) carry everything, ratio 1 : 0.16
        CHECK(pw[2] / s == Catch::Approx(1.0 / 1.16).epsilon(1e-9));
        CHECK(pw[29] / s == Catch::Approx(0.16 / 1.16).epsilon(1e-9));
        CHECK(pw[7] / s < 1e-20);
    }
}

TEST_CASE("spin-diagonal reduction matches the raw 2x2 coupling") {
    const PhysParams p = natural_params(1.0 / 12.0);
    FieldConfig field;
    field.gamma = p.gamma;
    const Grid2D g(2.0 * PI, 32, -10.0, 10.0, 64, BoundaryY::None);
    const auto f = smooth_test_field(g);

    const auto block = reduce_to_spin_diagonal(field, p);
    CHECK(block.coupling_coefficient == Catch::Approx(1.0 / 12.0));

    const auto via_block = block.apply(f);
    const auto via_raw = apply_raw_hamiltonian(field, p, f);
    CHECK(max_abs_diff(via_block.plus, via_raw.plus) < 1e-12);
    CHECK(max_abs_diff(via_block.minus, via_raw.minus) < 1e-12);
}

TEST_CASE("block Hamiltonian expectation on an analytic eigenstate") {
    // alpha gamma = 1/12, kx0 = 6 on a 2 pi torus: omega_c = 1, l = 1,
    // E_0 = 1/2 + kx0^2/2 = 18.5 in oscillator units.
    const PhysParams p = natural_params(1.0 / 12.0);
    FieldConfig field;
    field.gamma = p.gamma;
    const Grid2D g(2.0 * PI, 32, -17.0, 17.0, 256, BoundaryY::None);

    SpinorField f(g);
    for (int ix = 0; ix < g.n_x; ++ix)
        for (int iy = 0; iy < g.n_y; ++iy) {
            const double y = g.y(iy);
            f.plus[g.idx(ix, iy)] =
                std::exp(cplx(0, 6.0 * g.x(ix))) * std::exp(-0.5 * y * y);
        }
    const double n = std::sqrt(total_norm(f));
    for (auto& z : f.plus) z /= n;

    const auto op = reduce_to_spin_diagonal(field, p);
    const auto Hf = op.apply(f);
    double e = 0.0;
    for (std::size_t i = 0; i < f.plus.size(); ++i)
        e += (std::conj(f.plus[i]) * Hf.plus[i]).real();
    e *= g.hx() * g.hy();
    CHECK(e == Catch::Approx(18.5).margin(1e-8));
}

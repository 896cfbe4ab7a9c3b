#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "bcurve/roots.hpp"

using namespace bcurve;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double quartic_q(double lambda, double xi, std::complex<double> t_abs) {
    auto t = t_abs;
    return std::abs(((t + 4 * lambda) * t + 4 * (lambda * lambda - xi * xi)) * t * t + 1.0);
}

// companion-matrix eigenvalues of Q, the independent root oracle
std::vector<std::complex<double>> companion_roots(double lambda, double xi) {
    Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
    c(1, 0) = c(2, 1) = c(3, 2) = 1.0;
    c(0, 3) = -1.0;                               // -a0
    c(1, 3) = 0.0;                                // -a1
    c(2, 3) = -4 * (lambda * lambda - xi * xi);   // -a2
    c(3, 3) = -4 * lambda;                        // -a3
    Eigen::EigenSolver<Eigen::Matrix4d> es(c);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < 4; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

} // namespace

TEST_CASE("eta: critical circle root") {
    CHECK_THAT(eta(0.0), WithinAbs(1.0, 1e-14));
    CHECK_THAT(eta(-0.2), WithinAbs(1.117181339509767, 1e-12));
    double e = eta(1.5);
    CHECK(e > 1e-6);
    CHECK(e < 1.0);
    CHECK_THAT(std::pow(e, 4) + 2 * 1.5 * std::pow(e, 3) - 1, WithinAbs(0.0, 1e-12));
    // continuity over a wide multiplier range
    double prev = eta(-5.0);
    for (double l = -4.9; l < 5.0; l += 0.1) {
        double cur = eta(l);
        CHECK(cur < prev); // eta is strictly decreasing in lambda
        prev = cur;
    }
}

TEST_CASE("u_star: exceptional locus") {
    CHECK_FALSE(u_star(0.5).has_value());
    CHECK_FALSE(u_star(0.0).has_value());
    auto u27 = u_star(-0.27);
    REQUIRE(u27.has_value());
    CHECK_THAT(*u27, WithinAbs(2.34, 5e-3)); // two decimals
    auto u1 = u_star(-1.0);
    REQUIRE(u1.has_value());
    double e = *u1;
    CHECK(e > 0);
    CHECK_THAT(4 * e * e * e + -8 * e * e - e - 2, WithinAbs(0.0, 1e-11));
}

TEST_CASE("xi_of") {
    CHECK_THAT(xi_of(0.0, 1.0), WithinRel(std::sqrt(2.0) / 2.0, 1e-15));
    double th = xi_of(-0.2, eta(-0.2));
    CHECK_THAT(th * th, WithinAbs(0.328893, 1e-5));
    auto u = u_star(-0.27);
    double xs = xi_of(-0.27, *u);
    CHECK_THAT(xs, WithinAbs(1.0 / (4 * 0.27), 1e-2));
    CHECK_THAT(4 * -0.27 * xs + 1, WithinAbs(0.0, 1e-10)); // the locus criterion itself
    CHECK_THROWS_AS(xi_of(0.0, -1.0), std::domain_error);
}

TEST_CASE("eta_hat") {
    CHECK_THAT(eta_hat(0.0), WithinRel(std::sqrt(2.0) / 2.0, 1e-14));
    double v = eta_hat(-0.2);
    CHECK_THAT(v * v, WithinAbs(0.328893, 1e-5));
    CHECK_THAT(eta_hat(-0.2), WithinAbs(xi_of(-0.2, eta(-0.2)), 1e-12));
}

TEST_CASE("quartic roots: paper fixture with conjugate pair") {
    // lambda recovered from -4 lambda = sum of roots with e1=2, e2=1,
    // e3,e4 = (-3 +- i sqrt 23)/8
    double lambda = -9.0 / 16.0;
    auto r = quartic_roots(lambda, 2.0);
    CHECK_THAT(r.e2, WithinAbs(1.0, 1e-10));
    CHECK_FALSE(r.real_pair);
    CHECK_THAT(r.e3.real(), WithinAbs(-3.0 / 8.0, 1e-10));
    CHECK_THAT(r.e3.imag(), WithinAbs(std::sqrt(23.0) / 8.0, 1e-10));
    CHECK_THAT(r.e4.imag(), WithinAbs(-std::sqrt(23.0) / 8.0, 1e-10));
}

TEST_CASE("quartic roots: constant-term identity") {
    auto r = quartic_roots(0.0, 2.0);
    CHECK(r.e2 > 0);
    CHECK(r.e2 < 2.0);
    std::complex<double> prod = 2.0 * r.e2 * r.e3 * r.e4;
    CHECK_THAT(prod.real(), WithinAbs(1.0, 1e-9));
    CHECK_THAT(prod.imag(), WithinAbs(0.0, 1e-9));
}

TEST_CASE("quartic roots vs companion-matrix oracle") {
    double lambda = -0.5, e1 = 3.0;
    double xi = xi_of(lambda, e1);
    auto r = quartic_roots(lambda, e1);
    for (auto t : {std::complex<double>(e1), std::complex<double>(r.e2), r.e3, r.e4})
        CHECK(quartic_q(lambda, xi, t) < 1e-9);
    auto oracle_roots = companion_roots(lambda, xi);
    // every returned root appears among the eigenvalues
    for (auto t : {std::complex<double>(r.e2), r.e3, r.e4}) {
        double best = 1e9;
        for (auto& o : oracle_roots) best = std::min(best, std::abs(o - t));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("classify") {
    CHECK(classify(1.1, 1.27) == Region::negative_type);
    CHECK(classify(-0.27, *u_star(-0.27)) == Region::exceptional);
    CHECK(classify(-0.5, 3.4992434505569715) == Region::positive_type);
    for (double l : {-0.3, -0.7, -1.2}) {
        double u = *u_star(l);
        CHECK(classify(l, u * (1 - 1e-3)) == Region::negative_type);
        CHECK(classify(l, u * (1 + 1e-3)) == Region::positive_type);
    }
}

TEST_CASE("random admissible parameters: root identities") {
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> ul(-1.5, 1.5), uf(0.02, 3.0);
    for (int i = 0; i < 100; ++i) {
        double lambda = ul(rng);
        double e1 = eta(lambda) * (1 + uf(rng));
        CAPTURE(lambda, e1);
        auto p = make_parameters(lambda, e1);
        double scale = std::max(1.0, std::pow(e1, 4));
        for (auto t : {std::complex<double>(p.e1), std::complex<double>(p.e2), p.e3, p.e4})
            CHECK(quartic_q(lambda, p.xi, t) < 1e-9 * scale);
        std::complex<double> sum = p.e1 + p.e2 + p.e3 + p.e4;
        std::complex<double> prod = p.e1 * p.e2 * p.e3 * p.e4;
        CHECK_THAT(sum.real(), WithinAbs(-4 * lambda, 1e-9 * std::max(1.0, e1)));
        CHECK_THAT(sum.imag(), WithinAbs(0.0, 1e-10));
        CHECK_THAT(prod.real(), WithinAbs(1.0, 1e-9 * scale));
        CHECK(p.e2 > 0);
        CHECK(p.e2 < p.e1);
        // 4 xi^2 t^2 - 1 >= 0 on [e2, e1]
        CHECK(p.radial_sq(p.e2) >= -1e-12 * scale);
        CHECK(p.radial_sq(0.5 * (p.e1 + p.e2)) > 0);
    }
}

TEST_CASE("double-root collapse at the circle") {
    for (double lambda : {-0.4, 0.0, 0.9}) {
        double h = eta(lambda);
        auto p = make_parameters(lambda, h * (1 + 1e-6));
        CHECK_THAT(p.e2, WithinAbs(h, 1e-3));
    }
}

TEST_CASE("xi strictly increasing in e1") {
    for (double lambda : {-1.0, -0.3, 0.0, 0.7}) {
        double h = eta(lambda);
        double prev = xi_of(lambda, h * 1.0001);
        for (double f = 1.01; f < 6.0; f *= 1.17) {
            double cur = xi_of(lambda, h * f);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("admissibility gate") {
    CHECK_THROWS_AS(make_parameters(0.3, 0.5), AdmissibilityError);
    CHECK_THROWS_AS(quartic_roots(0.0, 0.9), AdmissibilityError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracdiff/specfun.hpp"
#include "fracdiff/transforms.hpp"
#include "oracles.hpp"

#include <cmath>
#include <complex>

using namespace fracdiff;
using namespace fracdiff::transforms;
namespace sf = fracdiff::specfun;

TEST_CASE("laplace_numeric basics")
{
    CHECK(laplace_numeric([](double) { return 1.0; }, 2.0)
          == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(laplace_numeric([](double t) { return std::exp(-3.0 * t); }, 1.0)
          == doctest::Approx(0.25).epsilon(1e-10));
    CHECK_THROWS_AS(laplace_numeric([](double) { return 1.0; }, 0.0), DomainError);
}

TEST_CASE("laplace of M and N reproduce the Mittag-Leffler values")
{
    const auto mw = FracOrder::m_wright(0.5);
    const auto ef = FracOrder::error_fn(0.5);
    const double lm = laplace_numeric(
        [&](double t) { return sf::m_wright(mw, t).value; }, 1.0);
    CHECK(lm == doctest::Approx(0.4275835761558070).epsilon(1e-8));
    const double ln = laplace_numeric(
        [&](double t) { return sf::frac_erf(ef, t).value; }, 1.0);
    CHECK(ln == doctest::Approx(0.4275835761558070).epsilon(1e-8));
}

TEST_CASE("fourier_numeric parity handling")
{
    // Gaussian pair: the normalized M_(1/2) has transform 2 exp(-k^2)
    auto gauss = [](double x) { return std::exp(-0.25 * x * x) / std::sqrt(M_PI); };
    const auto at0 = fourier_numeric(gauss, 0.0);
    CHECK(at0.real() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(at0.imag() == 0.0);

    const auto at1 = fourier_numeric(gauss, 1.0);
    CHECK(at1.real() == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-9));
    CHECK(std::fabs(at1.imag()) < 1e-10);

    auto odd = [](double x) { return x * std::exp(-x * x); };
    const auto o0 = fourier_numeric(odd, 0.0);
    CHECK(o0.real() == 0.0);
    const auto o2 = fourier_numeric(odd, 2.0);
    CHECK(std::fabs(o2.real()) < 1e-10);
    // int x exp(-x^2) e^{ikx} dx = i k sqrt(pi)/2 exp(-k^2/4)
    CHECK(o2.imag() == doctest::Approx(std::sqrt(M_PI) * std::exp(-1.0)).epsilon(1e-9));
    const auto om2 = fourier_numeric(odd, -2.0);
    CHECK(om2.imag() == doctest::Approx(-o2.imag()).epsilon(1e-12));
}

TEST_CASE("mellin_numeric values and strip violations")
{
    CHECK(mellin_numeric([](double r) { return std::exp(-r); }, 2.0)
          == doctest::Approx(1.0).epsilon(1e-9));
    const auto mw = FracOrder::m_wright(0.5);
    CHECK(mellin_numeric([&](double r) { return sf::m_wright(mw, r).value; }, 1.0)
          == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(mellin_numeric([&](double r) { return sf::m_wright(mw, r).value; }, 3.0)
          == doctest::Approx(2.0).epsilon(1e-8));
    // exp(-r) has no Mellin transform at s <= 0
    CHECK_THROWS_AS(mellin_numeric([](double r) { return std::exp(-r); }, -0.5),
                    StripViolation);
    // constants diverge at infinity
    CHECK_THROWS_AS(mellin_numeric([](double) { return 1.0; }, 1.0), StripViolation);
}

TEST_CASE("hankel0_inverse values")
{
    QuadratureSpec q;
    // exp(-k^2) spectrum: integral = exp(-r^2/4)/2
    for (double r : {0.0, 1.0, 3.0}) {
        CHECK(hankel0_inverse([](double k) { return std::exp(-k * k); }, r, q)
              == doctest::Approx(0.5 * std::exp(-0.25 * r * r)).epsilon(1e-8));
    }
    // frozen from the direct quadrature oracle: int k exp(-k^2) dk = 1/2
    CHECK(hankel0_inverse([](double k) { return std::exp(-k * k); }, 0.0, q)
          == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(hankel0_inverse([](double) { return 0.0; }, 1.0, q) == 0.0);
    CHECK_THROWS_AS(hankel0_inverse([](double k) { return std::exp(-k * k); }, -1.0, q),
                    DomainError);
    // non-decaying spectrum at r = 0 cannot converge without a cutoff
    CHECK_THROWS_AS(hankel0_inverse([](double k) { return 1.0 / (1.0 + k); }, 0.0, q),
                    QuadratureFailure);
    // ... but a requested truncation returns the finite truncated value
    QuadratureSpec qc = q;
    qc.tail_cutoff = 100.0;
    CHECK(hankel0_inverse([](double k) { return 1.0 / (1.0 + k); }, 0.0, qc) > 0.0);
}

TEST_CASE("heavy-tail Mittag-Leffler spectrum converges for r > 0")
{
    const auto ml = FracOrder::mittag_leffler(0.75);
    QuadratureSpec q;
    const double v = hankel0_inverse(
        [&](double k) { return sf::mittag_leffler(ml, -k * k).value; }, 1.0, q);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
}

TEST_CASE("inv_laplace_contour basics and failure")
{
    CHECK(inv_laplace_contour([](std::complex<double> s) { return 1.0 / s; }, 1.0)
          == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(inv_laplace_contour([](std::complex<double> s) { return 1.0 / (s * s); }, 2.0)
          == doctest::Approx(2.0).epsilon(1e-10));
    for (double a : {0.5, 2.0}) {
        for (double t : {0.2, 1.0, 4.0}) {
            const double got = inv_laplace_contour(
                [&](std::complex<double> s) { return 1.0 / (s + a); }, t);
            CHECK(got == doctest::Approx(std::exp(-a * t)).epsilon(1e-8));
        }
    }
    CHECK_THROWS_AS(inv_laplace_contour([](std::complex<double>) {
                        return std::complex<double>(std::nan(""), 0.0);
                    }, 1.0),
                    ContourFailure);
    CHECK_THROWS_AS(inv_laplace_contour([](std::complex<double> s) { return 1.0 / s; }, 0.0),
                    DomainError);
}

TEST_CASE("exponential Laplace pairs cross-check the M-Wright function")
{
    // L[(nu/t^{nu+1}) M_nu(t^-nu)](s) = exp(-s^nu) and the s^{nu-1} variant
    const double nu = 0.5;
    const auto mw = FracOrder::m_wright(nu);
    for (double t : {0.5, 1.0, 2.5}) {
        const double direct = nu / std::pow(t, nu + 1.0)
                              * sf::m_wright(mw, std::pow(t, -nu)).value;
        const double inverted = inv_laplace_contour(
            [&](std::complex<double> s) { return std::exp(-std::pow(s, nu)); }, t);
        CHECK(inverted == doctest::Approx(direct).epsilon(1e-9));

        const double direct2 = std::pow(t, -nu) * sf::m_wright(mw, std::pow(t, -nu)).value;
        const double inverted2 = inv_laplace_contour(
            [&](std::complex<double> s) {
                return std::exp(-std::pow(s, nu)) / std::pow(s, 1.0 - nu);
            }, t);
        CHECK(inverted2 == doctest::Approx(direct2).epsilon(1e-9));
    }
}

TEST_CASE("QuadratureSpec validation")
{
    QuadratureSpec q;
    q.abs_tol = 0.0;
    CHECK_THROWS_AS(laplace_numeric([](double) { return 1.0; }, 1.0, q), DomainError);
}

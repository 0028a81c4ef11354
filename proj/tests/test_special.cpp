#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pair_radiance/errors.hpp"
#include "pair_radiance/special.hpp"

using namespace pair_radiance;

namespace {
ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ConfigError;
}

Vec3 cross_re(const Vec3& k, const CVec3& e, int part) {
  // Real or imaginary part of k x e.
  Vec3 v{part == 0 ? e[0].real() : e[0].imag(), part == 0 ? e[1].real() : e[1].imag(),
         part == 0 ? e[2].real() : e[2].imag()};
  return cross(k, v);
}
}  // namespace

TEST_SUITE("special") {
  TEST_CASE("Bessel values at the origin and J_1(1)") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    for (int m = 1; m <= kMaxBesselOrder; ++m) CHECK(bessel_j(m, 0.0) == 0.0);
    // J_1(1) from the long-double series.
    CHECK(bessel_j(1, 1.0) == doctest::Approx(0.4400505857449335).epsilon(1e-14));
    CHECK(bessel_j(1, 1.0) == doctest::Approx(static_cast<double>(oracle::bessel_series(1, 1.0L))).epsilon(1e-14));
  }

  TEST_CASE("Bessel agrees with the long double series on |x| <= 10") {
    for (int m = 0; m <= kMaxBesselOrder; ++m) {
      for (int i = 0; i <= 200; ++i) {
        const double x = -10.0 + 0.1 * i + 1e-3;
        const double ref = static_cast<double>(oracle::bessel_series(m, x));
        CHECK(std::abs(bessel_j(m, x) - ref) <= 1e-12 * std::abs(ref) + 1e-15);
      }
    }
  }

  TEST_CASE("Bessel agrees with an independent library on |x| <= 50") {
    for (int m = 0; m <= kMaxBesselOrder; ++m) {
      for (int i = 0; i <= 500; ++i) {
        const double x = 0.1 * i + 0.0137;
        if (x > kMaxBesselArgument) break;
        const double ref = boost::math::cyl_bessel_j(m, x);
        CHECK(std::abs(bessel_j(m, x) - ref) <= 1e-12 * std::abs(ref) + 1e-15);
      }
    }
  }

  TEST_CASE("Bessel parity and recurrence") {
    for (int m = 0; m <= kMaxBesselOrder; ++m) {
      for (double x : {0.3, 1.7, 4.2, 13.0, 37.5}) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        CHECK(bessel_j(m, -x) == sign * bessel_j(m, x));
      }
    }
    for (int m = 1; m < kMaxBesselOrder; ++m) {
      for (int i = 1; i <= 100; ++i) {
        const double x = 0.5 * i;
        const double r = bessel_j(m - 1, x) + bessel_j(m + 1, x) - 2.0 * m / x * bessel_j(m, x);
        CHECK(std::abs(r) < 1e-10);
      }
    }
  }

  TEST_CASE("Bessel rejects bad input") {
    CHECK(kind_of([] { bessel_j(1, std::numeric_limits<double>::quiet_NaN()); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { bessel_j(21, 1.0); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { bessel_j(-1, 1.0); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("form factor") {
    CHECK(form_factor(0.0) == 1.0);
    CHECK(std::abs(form_factor(1e-3) - (1.0 - 1e-6 / 10.0)) < 1e-13);
    CHECK(form_factor(M_PI) == doctest::Approx(3.0 / (M_PI * M_PI)).epsilon(1e-13));
    double prev = 1.0;
    for (int i = 1; i <= 300; ++i) {
      const double f = form_factor(M_PI * i / 300.0);
      CHECK(f < prev);
      prev = f;
    }
    // Continuity across the series switch.
    const double x = 0.05;
    const double closed = 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
    CHECK(std::abs(form_factor(std::nextafter(x, 0.0)) - closed) < 1e-13);
    CHECK(std::abs(form_factor(x) - closed) < 1e-13);
    CHECK(kind_of([] { form_factor(-0.1); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("helicity vectors along +z") {
    const auto eL = helicity_vector({0, 0, 1}, Helicity::L).e;
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(eL[0] - Complex(s, 0)) < 1e-15);
    CHECK(std::abs(eL[1] - Complex(0, s)) < 1e-15);
    CHECK(std::abs(eL[2]) < 1e-15);
    const auto eR = helicity_vector({0, 0, 1}, Helicity::R).e;
    for (int i = 0; i < 3; ++i) CHECK(eR[i] == std::conj(eL[i]));
  }

  TEST_CASE("helicity vector invariants on random directions") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 2000; ++n) {
      const Vec3 k = oracle::random_unit(rng);
      for (Helicity h : {Helicity::L, Helicity::R}) {
        const auto e = helicity_vector(k, h).e;
        Complex norm{}, self{}, trans{};
        for (int i = 0; i < 3; ++i) {
          norm += e[i] * std::conj(e[i]);
          self += e[i] * e[i];
        }
        trans = k.x * e[0] + k.y * e[1] + k.z * e[2];
        CHECK(std::abs(norm - 1.0) < 1e-12);
        CHECK(std::abs(self) < 1e-12);
        CHECK(std::abs(trans) < 1e-12);
        // i k x e = +e for L, -e for R.
        const Vec3 re = cross_re(k, e, 0);
        const Vec3 im = cross_re(k, e, 1);
        const double sign = h == Helicity::L ? 1.0 : -1.0;
        const Complex c[3] = {{-im.x, re.x}, {-im.y, re.y}, {-im.z, re.z}};
        for (int i = 0; i < 3; ++i) CHECK(std::abs(c[i] - sign * e[i]) < 1e-12);
      }
    }
    // The -z pole uses the phi = 0 branch and still satisfies the invariants.
    const auto e = helicity_vector({0, 0, -1}, Helicity::L).e;
    CHECK(std::abs(e[0] - Complex(-1.0 / std::sqrt(2.0), 0)) < 1e-15);
    CHECK(std::abs(e[1] - Complex(0, 1.0 / std::sqrt(2.0))) < 1e-15);
    CHECK(kind_of([] { helicity_vector({0, 0, 1.001}, Helicity::L); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("polarization overlap") {
    const Vec3 z{0, 0, 1};
    CHECK(polarization_overlap(z, Helicity::L, z, Helicity::R) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(polarization_overlap(z, Helicity::L, z, Helicity::L) < 1e-28);
    std::mt19937_64 rng(11);
    for (int n = 0; n < 10000; ++n) {
      const Vec3 a = oracle::random_unit(rng);
      const Vec3 b = oracle::random_unit(rng);
      const double c = dot(a, b);
      double sum = 0.0;
      for (Helicity h1 : {Helicity::L, Helicity::R}) {
        for (Helicity h2 : {Helicity::L, Helicity::R}) {
          const double o = polarization_overlap(a, h1, b, h2);
          CHECK(std::abs(o - overlap_from_cos(c, h1 == h2)) < 1e-12);
          CHECK(o == polarization_overlap(b, h2, a, h1));
          sum += o;
        }
      }
      CHECK(std::abs(sum - (1.0 + c * c)) < 1e-12);
    }
  }

  TEST_CASE("harmonic suppression ratio") {
    const double v = 0.0026;
    CHECK(harmonic_suppression_ratio(1, v).asymptotic == doctest::Approx(16.0 * v * v).epsilon(1e-14));
    const double e2 = std::exp(2.0);
    CHECK(oracle::rel(harmonic_suppression_ratio(100, v).asymptotic, e2 * v * v) < 0.015);
    CHECK_FALSE(harmonic_suppression_ratio(20, v).exact.has_value());
    // The exact Bessel ratio tends to a quarter of the asymptotic form.
    for (int m = 1; m <= 6; ++m) {
      const auto r = harmonic_suppression_ratio(m, 1e-3);
      REQUIRE(r.exact.has_value());
      CHECK(*r.exact / r.asymptotic == doctest::Approx(0.25).epsilon(0.01));
    }
    CHECK(kind_of([] { harmonic_suppression_ratio(0, 0.1); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { harmonic_suppression_ratio(1, 1.0); }) == ErrorKind::InvalidInput);
  }
}

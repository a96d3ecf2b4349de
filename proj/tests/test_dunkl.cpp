#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "drabi/dunkl.hpp"

using namespace drabi;

namespace {

// All four reduced operators at generic parameter values.
std::vector<DunklOperatorSpec> generic_specs(int parity) {
  return {
      grm_dunkl_spec(/*delta=*/0.7, /*kappa=*/0.489897948556636,
                     /*lambda_plus=*/0.365, /*lambda_minus=*/0.275, parity),
      rm_dunkl_spec(/*delta=*/0.5, /*kappa=*/0.6, parity),
      two_photon_dunkl_spec(/*gamma=*/3.0, /*q=*/0.25, /*delta=*/0.4, parity),
      two_photon_dunkl_spec(3.0, 0.75, 0.4, parity),
      two_mode_dunkl_spec(3.0, 0.5, 0.4, parity),
      two_mode_dunkl_spec(3.0, 1.0, 0.4, parity),
  };
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::vector<double> coeff(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : coeff) x = c(rng);
  if (coeff.back() == 0.0) coeff.back() = 1.0;
  return Polynomial(std::move(coeff));
}

// Matrix-side action: multiply the TTRR matrix into the coefficient vector.
std::vector<double> matrix_action(const TridiagonalMatrix& m,
                                  const Polynomial& p) {
  std::vector<double> out(static_cast<std::size_t>(m.size()), 0.0);
  for (int n = 0; n < m.size(); ++n) {
    const double c = p.at(n);
    if (c == 0.0) continue;
    out[static_cast<std::size_t>(n)] += m.diag[static_cast<std::size_t>(n)] * c;
    if (n > 0)
      out[static_cast<std::size_t>(n - 1)] +=
          m.super[static_cast<std::size_t>(n - 1)] * c;
    if (n + 1 < m.size())
      out[static_cast<std::size_t>(n + 1)] +=
          m.sub[static_cast<std::size_t>(n)] * c;
  }
  return out;
}

}  // namespace

TEST_CASE("matrix columns equal the direct operator action on monomials") {
  const int n_top = 40;
  for (int parity : {+1, -1}) {
    for (const auto& spec : generic_specs(parity)) {
      const auto m = build_ttrr(spec, n_top + 1);
      for (int n = 0; n <= n_top; ++n) {
        const auto image = apply_dunkl(spec, Polynomial::monomial(n));
        // tridiagonal support only
        CHECK(image.degree() <= n + 1);
        for (int k = 0; k < n - 1; ++k) {
          INFO(to_string(spec.model), " parity ", parity, " n=", n, " k=", k);
          CHECK(image.at(k) == 0.0);
        }
        const double want_super =
            n > 0 ? m.super[static_cast<std::size_t>(n - 1)] : 0.0;
        INFO(to_string(spec.model), " parity ", parity, " n=", n);
        CHECK(image.at(n - 1) == doctest::Approx(want_super).epsilon(1e-14));
        CHECK(image.at(n) ==
              doctest::Approx(m.diag[static_cast<std::size_t>(n)])
                  .epsilon(1e-14));
        CHECK(image.at(n + 1) ==
              doctest::Approx(m.sub[static_cast<std::size_t>(n)])
                  .epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("matrix action equals direct action on random polynomials") {
  std::mt19937_64 rng(20240817ULL);
  for (int parity : {+1, -1}) {
    for (const auto& spec : generic_specs(parity)) {
      const auto m = build_ttrr(spec, 34);
      for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_polynomial(rng, 32);
        const auto direct = apply_dunkl(spec, p);
        const auto via_matrix = matrix_action(m, p);
        for (int k = 0; k < m.size(); ++k) {
          const double a = direct.at(k);
          const double b = via_matrix[static_cast<std::size_t>(k)];
          const double scale = std::max({1.0, std::abs(a), std::abs(b)});
          INFO(to_string(spec.model), " parity ", parity, " trial ", trial,
               " k=", k);
          CHECK(std::abs(a - b) / scale <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("generalized entries at a derived parameter point") {
  // gamma=1, mu=0.7, k1=0.8, k2=0.3 in reduced units:
  // delta=0.7, kappa=sqrt(0.24), lambda_plus=0.365, lambda_minus=0.275.
  const double kappa = std::sqrt(0.24);
  const auto spec = grm_dunkl_spec(0.7, kappa, 0.365, 0.275, +1);
  const auto m = build_ttrr(spec, 6);

  // column n: super[n-1] = kappa n, diag[n] = n + (-1)^n delta,
  //           sub[n] = (lambda_plus + (-1)^n lambda_minus) / kappa
  CHECK(m.diag[0] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(m.diag[1] == doctest::Approx(1.0 - 0.7).epsilon(1e-15));
  CHECK(m.diag[2] == doctest::Approx(2.0 + 0.7).epsilon(1e-15));
  CHECK(m.super[0] == doctest::Approx(kappa).epsilon(1e-15));
  CHECK(m.super[1] == doctest::Approx(2.0 * kappa).epsilon(1e-15));
  CHECK(m.sub[0] == doctest::Approx((0.365 + 0.275) / kappa).epsilon(1e-15));
  CHECK(m.sub[1] == doctest::Approx((0.365 - 0.275) / kappa).epsilon(1e-15));

  // the sub/super product for the balanced form is (n+1) k^2 / gamma^2-type
  // and must be nonnegative on both parities
  for (int parity : {+1, -1}) {
    const auto s = grm_dunkl_spec(0.7, kappa, 0.365, 0.275, parity);
    const auto t = build_ttrr(s, 40);
    for (std::size_t i = 0; i < t.super.size(); ++i)
      CHECK(t.super[i] * t.sub[i] >= 0.0);
  }
}

TEST_CASE("symmetric-coupling entries and spot action") {
  const auto spec = rm_dunkl_spec(0.5, 0.6, +1);
  const auto m = build_ttrr(spec, 5);
  CHECK(m.diag[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.diag[1] == doctest::Approx(0.5).epsilon(1e-15));  // 1 - 0.5
  CHECK(m.diag[2] == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(m.sub[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(m.super[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(m.super[1] == doctest::Approx(1.2).epsilon(1e-15));

  // action on the constant polynomial: delta + kappa z for parity +1
  const auto image = apply_dunkl(spec, Polynomial::monomial(0));
  CHECK(image.degree() == 1);
  CHECK(image.at(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(image.at(1) == doctest::Approx(0.6).epsilon(1e-15));

  const auto image_minus =
      apply_dunkl(rm_dunkl_spec(0.5, 0.6, -1), Polynomial::monomial(0));
  CHECK(image_minus.at(0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(image_minus.at(1) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("second-order families: frozen leading entries") {
  {
    const auto m = build_ttrr(two_photon_dunkl_spec(3.0, 0.25, 0.4, +1), 4);
    CHECK(m.diag[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(m.sub[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.super[0] == doctest::Approx(1.0).epsilon(1e-15));  // 2*1*(2q)
    CHECK(m.diag[1] == doctest::Approx(3.0 - 0.4).epsilon(1e-15));
  }
  {
    const auto m = build_ttrr(two_mode_dunkl_spec(3.0, 0.5, 0.4, -1), 4);
    CHECK(m.diag[0] == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(m.sub[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m.super[0] == doctest::Approx(1.0).epsilon(1e-15));  // 1*(2q)
    CHECK(m.diag[1] == doctest::Approx(3.0 + 0.4).epsilon(1e-15));
  }
}

TEST_CASE("equal couplings reduce the generalized operator to the symmetric one") {
  // lambda_minus = 0 and lambda_plus = kappa^2 happen exactly at k1 = k2
  const double kappa = 0.6;
  for (int parity : {+1, -1}) {
    const auto g = build_ttrr(
        grm_dunkl_spec(0.5, kappa, kappa * kappa, 0.0, parity), 30);
    const auto r = build_ttrr(rm_dunkl_spec(0.5, kappa, parity), 30);
    CHECK(g.diag == r.diag);
    CHECK(g.super == r.super);
    CHECK(g.sub == r.sub);
  }
}

TEST_CASE("parity flip is a sign flip of the reflection couplings") {
  // rm: parity -1 equals parity +1 with delta -> -delta
  {
    const auto a = build_ttrr(rm_dunkl_spec(0.5, 0.6, -1), 20);
    const auto b = build_ttrr(rm_dunkl_spec(-0.5, 0.6, +1), 20);
    CHECK(a.diag == b.diag);
    CHECK(a.super == b.super);
    CHECK(a.sub == b.sub);
  }
  // grm: parity -1 equals parity +1 with (delta, lambda_minus) negated
  {
    const auto a =
        build_ttrr(grm_dunkl_spec(0.7, 0.5, 0.4, 0.2, -1), 20);
    const auto b =
        build_ttrr(grm_dunkl_spec(-0.7, 0.5, 0.4, -0.2, +1), 20);
    CHECK(a.diag == b.diag);
    CHECK(a.super == b.super);
    CHECK(a.sub == b.sub);
  }
}

TEST_CASE("decoupled symmetric operator is diagonal") {
  const auto m = build_ttrr(rm_dunkl_spec(0.3, 0.0, +1), 6);
  for (double v : m.super) CHECK(v == 0.0);
  for (double v : m.sub) CHECK(v == 0.0);
  CHECK(m.diag[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(m.diag[1] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(m.diag[2] == doctest::Approx(2.3).epsilon(1e-15));
  CHECK(m.diag[3] == doctest::Approx(2.7).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(grm_dunkl_spec(0.5, 0.0, 0.3, 0.1, +1), Error);
  CHECK_THROWS_AS(grm_dunkl_spec(0.5, -0.2, 0.3, 0.1, +1), Error);
  CHECK_NOTHROW(rm_dunkl_spec(0.5, 0.0, +1));
  CHECK_THROWS_AS(two_photon_dunkl_spec(0.0, 0.25, 0.1, +1), Error);
  CHECK_THROWS_AS(two_photon_dunkl_spec(3.0, -0.25, 0.1, +1), Error);
  CHECK_THROWS_AS(two_mode_dunkl_spec(-1.0, 0.5, 0.1, +1), Error);
  CHECK_THROWS_AS(rm_dunkl_spec(0.5, 0.6, 0), Error);
  CHECK_THROWS_AS(build_ttrr(rm_dunkl_spec(0.5, 0.6, +1), -1), Error);
}

TEST_CASE("balancing to symmetric form") {
  // both reduced-operator families balance (products are nonnegative)
  for (int parity : {+1, -1}) {
    const auto m = build_ttrr(
        grm_dunkl_spec(0.7, std::sqrt(0.24), 0.365, 0.275, parity), 60);
    const auto b = balance_to_symmetric(m);
    REQUIRE(b.has_value());
    CHECK(b->diag == m.diag);
    for (std::size_t i = 0; i < b->off.size(); ++i)
      CHECK(b->off[i] ==
            doctest::Approx(std::sqrt(m.super[i] * m.sub[i])).epsilon(1e-14));
    // similarity: M = D S D^{-1} entrywise where the scale is nonzero
    for (std::size_t i = 0; i + 1 < b->scale.size(); ++i) {
      if (b->scale[i] == 0.0 || b->scale[i + 1] == 0.0) break;
      CHECK(m.super[i] == doctest::Approx(b->off[i] * b->scale[i] /
                                          b->scale[i + 1]).epsilon(1e-12));
      CHECK(m.sub[i] == doctest::Approx(b->off[i] * b->scale[i + 1] /
                                        b->scale[i]).epsilon(1e-12));
    }
  }

  // a negative sub*super product admits no real symmetrization
  TridiagonalMatrix skew;
  skew.diag = {0.0, 0.0};
  skew.super = {1.0};
  skew.sub = {-1.0};
  CHECK(!balance_to_symmetric(skew).has_value());

  // zero off-diagonals pass through unchanged
  TridiagonalMatrix dec;
  dec.diag = {1.0, 2.0, 3.0};
  dec.super = {0.0, 0.0};
  dec.sub = {0.0, 0.0};
  const auto b = balance_to_symmetric(dec);
  REQUIRE(b.has_value());
  CHECK(b->off == std::vector<double>{0.0, 0.0});
  CHECK(b->scale == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("dense expansion places the three diagonals") {
  TridiagonalMatrix m;
  m.diag = {1.0, 2.0, 3.0};
  m.super = {4.0, 5.0};
  m.sub = {6.0, 7.0};
  const auto d = m.dense();
  REQUIRE(d.rows() == 3);
  REQUIRE(d.cols() == 3);
  CHECK(d(0, 0) == 1.0);
  CHECK(d(0, 1) == 4.0);
  CHECK(d(1, 0) == 6.0);
  CHECK(d(1, 1) == 2.0);
  CHECK(d(1, 2) == 5.0);
  CHECK(d(2, 1) == 7.0);
  CHECK(d(2, 2) == 3.0);
  CHECK(d(0, 2) == 0.0);
  CHECK(d(2, 0) == 0.0);
}

TEST_CASE("polynomial helpers") {
  const Polynomial p({1.0, -2.0, 0.0, 3.0});  // 1 - 2z + 3z^3
  CHECK(p.degree() == 3);
  CHECK(p.derivative().coeff() == std::vector<double>{-2.0, 0.0, 9.0});
  CHECK(p.times_z().coeff() == std::vector<double>{0.0, 1.0, -2.0, 0.0, 3.0});
  CHECK(p.reflected().coeff() == std::vector<double>{1.0, 2.0, 0.0, -3.0});
  CHECK((p - p).is_zero());
  CHECK(Polynomial({0.0, 0.0}).is_zero());
  CHECK(Polynomial::monomial(2, 5.0).coeff() ==
        std::vector<double>{0.0, 0.0, 5.0});
  CHECK(p.at(7) == 0.0);
}

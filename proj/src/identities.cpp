#include "drabi/identities.hpp"

#include <array>
#include <sstream>

namespace drabi {

namespace {

using E = AlgebraElement;
using M = OperatorMatrix2;

struct Suite {
  std::vector<IdentityCheck> checks;

  void expect_eq(const std::string& name, const M& lhs, const M& rhs) {
    IdentityCheck c;
    c.name = name;
    c.pass = lhs == rhs;
    if (!c.pass)
      c.detail = "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
    checks.push_back(std::move(c));
  }

  void expect_eq(const std::string& name, const E& lhs, const E& rhs) {
    IdentityCheck c;
    c.name = name;
    c.pass = lhs == rhs;
    if (!c.pass)
      c.detail = "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
    checks.push_back(std::move(c));
  }

  void expect(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, pass ? "" : detail});
  }
};

int levi(int j, int k, int l) {
  const bool even = (j == 1 && k == 2 && l == 3) ||
                    (j == 2 && k == 3 && l == 1) ||
                    (j == 3 && k == 1 && l == 2);
  const bool odd = (j == 3 && k == 2 && l == 1) ||
                   (j == 2 && k == 1 && l == 3) ||
                   (j == 1 && k == 3 && l == 2);
  return even ? 1 : (odd ? -1 : 0);
}

// Plain factors used by the projected transformations.
M plane_swap(int j, int k) {  // (sigma_j + sigma_k)/sqrt(2); self-inverse
  return (M::pauli(j) + M::pauli(k)).scaled(ExactCoefficient::inv_root2());
}

M axis_rotation(int l, int sign) {  // (1 + sign*i*sigma_l)/sqrt(2)
  ExactCoefficient ph = ExactCoefficient::i();
  if (sign < 0) ph = -ph;
  return (M::identity() + M::pauli(l).scaled(ph))
      .scaled(ExactCoefficient::inv_root2());
}

std::string ujkl_name(int j, int k, int l, bool inv) {
  std::ostringstream os;
  os << "U(" << j << k << l << (inv ? ",inv" : "") << ")";
  return os.str();
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(bool corrupt_expectations) {
  Suite s;
  const E one = E::one();
  const E refl = E::reflection();
  const ExactCoefficient ci = ExactCoefficient::i();
  const M id = M::identity();

  // ---- Pauli multiplication table, checked against entrywise products ----
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; k <= 3; ++k) {
      const PauliProduct p = pauli_product(j, k);
      std::ostringstream name;
      name << "pauli product sigma_" << j << " sigma_" << k;
      s.expect_eq(name.str(), M::pauli(j) * M::pauli(k),
                  M::pauli(p.index).scaled(p.coeff));
    }
  }
  // sigma_1 sigma_2 sigma_3 = i * 1
  s.expect_eq("sigma_1 sigma_2 sigma_3 = i", M::pauli(1) * M::pauli(2) * M::pauli(3),
              id.scaled(ci));

  // ---- factor-level relations for each ordering of the three axes ----
  const std::array<std::array<int, 3>, 6> perms = {
      {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  for (const auto& [j, k, l] : perms) {
    const M swap = plane_swap(j, k);
    const M rot = axis_rotation(l, +1);
    const M rot_inv = axis_rotation(l, -1);
    bool ok = true;
    std::string detail;
    auto sub = [&](const std::string& what, const M& lhs, const M& rhs) {
      if (!(lhs == rhs)) {
        ok = false;
        detail += what + ": lhs = " + lhs.to_string() +
                  "; rhs = " + rhs.to_string() + "  ";
      }
    };
    // the plane factor is a self-inverse unitary exchanging sigma_j, sigma_k
    sub("swap^2 = 1", swap * swap, id);
    sub("swap sigma_j swap = sigma_k", swap * M::pauli(j) * swap, M::pauli(k));
    sub("swap sigma_k swap = sigma_j", swap * M::pauli(k) * swap, M::pauli(j));
    sub("swap anticommutes with sigma_l", swap * M::pauli(l),
        -(M::pauli(l) * swap));
    // the axis factor is unitary and intertwines sigma_j with its inverse
    sub("rot rot_inv = 1", rot * rot_inv, id);
    sub("rot sigma_j = sigma_j rot_inv", rot * M::pauli(j),
        M::pauli(j) * rot_inv);
    // rot sigma_j rot_inv = -eps(l,j,m) sigma_m, m the remaining axis
    {
      const int m = 6 - l - j;
      M expect = M::pauli(m);
      if (levi(l, j, m) > 0) expect = -expect;
      sub("rot sigma_j rot_inv", rot * M::pauli(j) * rot_inv, expect);
    }
    // product collapse: swap * rot = rot_inv * swap = a single Pauli
    {
      const int target = levi(j, k, l) > 0 ? k : j;
      sub("swap rot = single pauli", swap * rot, M::pauli(target));
      sub("rot_inv swap = single pauli", rot_inv * swap, M::pauli(target));
    }
    std::ostringstream name;
    name << "factor relations for axes (" << j << "," << k << "," << l << ")";
    s.expect(name.str(), ok, detail);
  }

  // ---- projected transformations: unitarity and the exchange rule ----
  for (const auto& [j, k, l] : perms) {
    for (const bool inv : {false, true}) {
      const M u = make_ujkl(j, k, l, inv);
      const M ud = u.adjoint();
      s.expect_eq(ujkl_name(j, k, l, inv) + " unitary", u * ud, id);
      s.expect_eq(ujkl_name(j, k, l, inv) + " unitary (reverse)", ud * u, id);

      // exchange rule: sigma_j and sigma_k map to sigma_k resp. sigma_j up
      // to a sign and possibly a factor of R; sigma_l maps into the span of
      // {sigma_l, R sigma_l}; sigma_0 is fixed.
      auto in_ray = [&](const M& got, int target) {
        const M t = M::pauli(target);
        const M rt = t.scaled(refl);
        return got == t || got == -t || got == rt || got == -rt;
      };
      bool ok = true;
      std::string detail;
      const M gj = conjugate(u, M::pauli(j));
      const M gk = conjugate(u, M::pauli(k));
      const M gl = conjugate(u, M::pauli(l));
      const M g0 = conjugate(u, M::pauli(0));
      if (!in_ray(gj, k)) {
        ok = false;
        detail += "sigma_j -> " + gj.to_string() + "  ";
      }
      if (!in_ray(gk, j)) {
        ok = false;
        detail += "sigma_k -> " + gk.to_string() + "  ";
      }
      if (!in_ray(gl, l)) {
        ok = false;
        detail += "sigma_l -> " + gl.to_string() + "  ";
      }
      if (!(g0 == id)) {
        ok = false;
        detail += "sigma_0 -> " + g0.to_string() + "  ";
      }
      s.expect(ujkl_name(j, k, l, inv) + " exchange rule", ok, detail);
    }
  }

  // ---- the spin-diagonalizing transformation and its inverse ----
  const M ufg = fg_unitary();
  const M ufg_inv = fg_unitary_inverse();
  s.expect_eq("forward * inverse = 1", ufg * ufg_inv, id);
  s.expect_eq("inverse * forward = 1", ufg_inv * ufg, id);

  // numeric image table of the forward transformation
  s.expect_eq("forward: sigma_0 -> sigma_0", conjugate(ufg, M::pauli(0)), id);
  s.expect_eq("forward: sigma_1 -> R sigma_3", conjugate(ufg, M::pauli(1)),
              M::pauli(3).scaled(refl));
  s.expect_eq("forward: sigma_2 -> -R sigma_2", conjugate(ufg, M::pauli(2)),
              -(M::pauli(2).scaled(refl)));
  s.expect_eq("forward: sigma_3 -> sigma_1", conjugate(ufg, M::pauli(3)),
              M::pauli(1));

  // numeric image table of the inverse transformation
  s.expect_eq("inverse: sigma_0 -> sigma_0", conjugate(ufg_inv, M::pauli(0)),
              id);
  s.expect_eq("inverse: sigma_1 -> sigma_3", conjugate(ufg_inv, M::pauli(1)),
              M::pauli(3));
  s.expect_eq("inverse: sigma_2 -> -R sigma_2", conjugate(ufg_inv, M::pauli(2)),
              -(M::pauli(2).scaled(refl)));
  s.expect_eq("inverse: sigma_3 -> R sigma_1", conjugate(ufg_inv, M::pauli(3)),
              M::pauli(1).scaled(refl));

  // ---- graded coefficient tables ----
  const E ae = E::symbol("A", ReflectionParity::even);
  const E be = E::symbol("B", ReflectionParity::even);
  const E co = E::symbol("C", ReflectionParity::odd);
  const E dd = E::symbol("D", ReflectionParity::odd);

  // forward transformation on graded component terms
  s.expect_eq("forward: A sigma_0 -> A sigma_0",
              conjugate(ufg, id.scaled(ae)), id.scaled(ae));
  s.expect_eq("forward: B sigma_1 -> B R sigma_3",
              conjugate(ufg, M::pauli(1).scaled(be)),
              M::pauli(3).scaled(be * refl));
  {
    // with a corrupted expectation the sign of i is flipped, so this line
    // must fail; that is the self-test hook
    const ExactCoefficient ph = corrupt_expectations ? ci : -ci;
    s.expect_eq("forward: C sigma_2 -> -i C R sigma_3",
                conjugate(ufg, M::pauli(2).scaled(co)),
                M::pauli(3).scaled((co * refl).scaled(ph)));
  }
  s.expect_eq("forward: D sigma_3 -> D sigma_0",
              conjugate(ufg, M::pauli(3).scaled(dd)), id.scaled(dd));

  // inverse transformation on odd coefficients (the grade that picks up R)
  const E yo = E::symbol("Y", ReflectionParity::odd);
  s.expect_eq("inverse: Y sigma_0 -> Y sigma_3",
              conjugate(ufg_inv, id.scaled(yo)), M::pauli(3).scaled(yo));
  s.expect_eq("inverse: Y sigma_1 -> Y sigma_0",
              conjugate(ufg_inv, M::pauli(1).scaled(yo)), id.scaled(yo));
  s.expect_eq("inverse: Y sigma_2 -> i Y R sigma_1",
              conjugate(ufg_inv, M::pauli(2).scaled(yo)),
              M::pauli(1).scaled((yo * refl).scaled(ci)));
  s.expect_eq("inverse: Y sigma_3 -> i Y R sigma_2",
              conjugate(ufg_inv, M::pauli(3).scaled(yo)),
              M::pauli(2).scaled((yo * refl).scaled(ci)));

  // ---- theorem, forward direction: block-diagonalization ----
  {
    const M h = M::from_components(ae, be, co, dd);
    s.expect("generic graded matrix satisfies the symmetry pattern",
             check_fg_form(h), "");
    const SpinSubspaceOperators ops = spin_diagonalize(h);
    const E upper = ae + dd + (be - co.scaled(ci)) * refl;
    const E lower = ae + dd - (be - co.scaled(ci)) * refl;
    s.expect_eq("upper subspace operator = A + D + (B - iC) R", ops.plus,
                upper);
    s.expect_eq("lower subspace operator = A + D - (B - iC) R", ops.minus,
                lower);
    // parity image: R sigma_1 -> sigma_3
    s.expect_eq("parity operator maps to sigma_3",
                conjugate(ufg, M::pauli(1).scaled(refl)), M::pauli(3));
    // the parity operator commutes with the graded matrix
    s.expect_eq("[H, R sigma_1] = 0", h * M::pauli(1).scaled(refl),
                M::pauli(1).scaled(refl) * h);
    // subspace operators commute with nothing for free: their reflection
    // commutators close on the odd components
    const E two = E::scalar(ExactCoefficient::from_rational(2));
    s.expect_eq("[L_plus, R] = -2iC + 2DR", ops.plus * refl - refl * ops.plus,
                -(two * co.scaled(ci)) + two * dd * refl);
    s.expect_eq("[L_minus, R] = +2iC + 2DR",
                ops.minus * refl - refl * ops.minus,
                two * co.scaled(ci) + two * dd * refl);
  }

  // ---- theorem, reverse direction: from diagonal back to graded form ----
  {
    const E xp = E::symbol("P", ReflectionParity::even);
    const E yp = E::symbol("p", ReflectionParity::odd);
    const E xm = E::symbol("Q", ReflectionParity::even);
    const E ym = E::symbol("q", ReflectionParity::odd);
    const M diag = M::diagonal(xp + yp, xm + ym);
    const M rebuilt = fg_from_diagonal(diag);
    s.expect("rebuilt matrix satisfies the symmetry pattern",
             check_fg_form(rebuilt), rebuilt.to_string());

    const ExactCoefficient half = ExactCoefficient::from_rational(1, 2);
    const E x0 = (xp + xm).scaled(half);
    const E x3 = (xp - xm).scaled(half);
    const E y0 = (yp + ym).scaled(half);
    const E y3 = (yp - ym).scaled(half);
    const M expected = id.scaled(x0) + M::pauli(1).scaled(x3 * refl) +
                       M::pauli(2).scaled((y3 * refl).scaled(ci)) +
                       M::pauli(3).scaled(y0);
    s.expect_eq("rebuilt = X0 + X3 R sigma_1 + i Y3 R sigma_2 + Y0 sigma_3",
                rebuilt, expected);

    // round trip recovers the diagonal exactly (unit constant = 1)
    const SpinSubspaceOperators back = spin_diagonalize(rebuilt);
    s.expect_eq("round trip recovers upper entry", back.plus, xp + yp);
    s.expect_eq("round trip recovers lower entry", back.minus, xm + ym);

    // grade split of the diagonal entries
    const auto [ev, od] = (xp + yp).grade_split();
    s.expect("grade split separates the parities", ev == xp && od == yp,
             ev.to_string() + " / " + od.to_string());
  }

  // ---- worked model shapes ----
  {
    // generalized model in component form: number operator, constant
    // splitting, odd raising/lowering content
    const E num = E::symbol("N", ReflectionParity::even);
    const E delta = E::symbol("G", ReflectionParity::even);
    const E raise_scaled = E::symbol("u", ReflectionParity::odd);
    const E lower_scaled = E::symbol("v", ReflectionParity::odd);
    const M h = M::from_components(num, delta, raise_scaled.scaled(ci),
                                   lower_scaled);
    s.expect("generalized-model component pattern is accepted",
             check_fg_form(h), "");
    const SpinSubspaceOperators ops = spin_diagonalize(h);
    s.expect_eq("generalized-model upper operator",
                ops.plus, num + lower_scaled + (delta + raise_scaled) * refl);
    // a matrix with an odd sigma_1 component must be rejected
    const M bad = M::from_components(num, lower_scaled, raise_scaled.scaled(ci),
                                     lower_scaled);
    s.expect("odd sigma_1 component is rejected", !check_fg_form(bad), "");
  }

  return s.checks;
}

}  // namespace drabi

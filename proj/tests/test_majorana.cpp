#include <doctest.h>

#include "majolab/errors.hpp"
#include "majolab/majorana.hpp"
#include "oracles.hpp"
#include "tables_transcribed.hpp"

using namespace majolab;
using oracle::I;

namespace {

const RepKind kKinds[] = {RepKind::Dirac, RepKind::Weyl, RepKind::Majorana};
const Dim kDims[] = {Dim::D2, Dim::D4};

CVector mat_vec(const CMatrix& m, const CVector& v) {
  CVector out(m.rows(), cplx(0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

CVector conjv(const CVector& v) {
  CVector o(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) o[i] = std::conj(v[i]);
  return o;
}

void check_list(const std::vector<CMatrix>& got, const std::vector<CMatrix>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t mu = 0; mu < want.size(); ++mu) {
    CAPTURE(mu);
    CHECK(oracle::diff(got[mu], want[mu]) <= tol);
  }
}

}  // namespace

TEST_CASE("Majorana defect and projection") {
  const RepSpec w2 = builtin(RepKind::Weyl, Dim::D2);
  CHECK(majorana_defect(w2, CVector{1.0, 1.0}) == doctest::Approx(std::sqrt(2.0)));
  oracle::Rng rng(31);
  for (Dim d : kDims)
    for (RepKind k : kKinds) {
      const RepSpec rep = builtin(k, d);
      for (int i = 0; i < 20; ++i) {
        const CVector psi = rng.vec(rep.spinor_size());
        const CVector p = majorana_project(rep, psi);
        CHECK(majorana_defect(rep, p) < 1e-15);
        CHECK(oracle::diff(majorana_project(rep, p), p) < 1e-15);
        // the defect is twice the distance to the projection
        CHECK(majorana_defect(rep, psi) == doctest::Approx(2.0 * oracle::diff(psi, p)));
      }
    }
  // in the Majorana rep the condition is reality
  const RepSpec m4 = builtin(RepKind::Majorana, Dim::D4);
  CHECK(majorana_defect(m4, CVector{1.0, -2.0, 0.5, 3.0}) == 0.0);
  CHECK(majorana_defect(m4, CVector{I, 0.0, 0.0, 0.0}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(majorana_defect(m4, CVector{1.0}), UsageError);
}

TEST_CASE("completing a Majorana spinor from one half") {
  const RepSpec d4 = builtin(RepKind::Dirac, Dim::D4);
  CHECK(oracle::diff(complete_from_component(d4, CVector{1.0, 0.0}, Half::Upper), CVector{1.0, 0.0, 0.0, I}) < 1e-15);
  const RepSpec d2 = builtin(RepKind::Dirac, Dim::D2);
  CHECK(oracle::diff(complete_from_component(d2, CVector{1.0}, Half::Upper), CVector{1.0, -I}) < 1e-15);

  oracle::Rng rng(32);
  for (const RepSpec& rep : {d4, d2, builtin(RepKind::Weyl, Dim::D4)}) {
    const std::size_t h = rep.spinor_size() / 2;
    for (int i = 0; i < 10; ++i) {
      const CVector part = rng.vec(h);
      const CVector up = complete_from_component(rep, part, Half::Upper);
      const CVector lo = complete_from_component(rep, part, Half::Lower);
      CHECK(majorana_defect(rep, up) < 1e-15);
      CHECK(majorana_defect(rep, lo) < 1e-15);
      for (std::size_t j = 0; j < h; ++j) {
        CHECK(up[j] == part[j]);
        CHECK(lo[h + j] == part[j]);
      }
    }
  }
  CHECK_THROWS_AS(complete_from_component(builtin(RepKind::Majorana, Dim::D4), CVector{1.0, 0.0}, Half::Upper),
                  UnsupportedError);
  CHECK_THROWS_AS(complete_from_component(builtin(RepKind::Weyl, Dim::D2), CVector{1.0}, Half::Upper),
                  UnsupportedError);
  CHECK_THROWS_AS(complete_from_component(d4, CVector{1.0}, Half::Upper), UsageError);
}

TEST_CASE("chiral projections reproduce the tabulated components") {
  oracle::Rng rng(33);
  const CVector a = rng.vec(2), b = rng.vec(2);
  const CVector psi4{a[0], a[1], b[0], b[1]};
  // Dirac: 1/2 [phi + chi; phi + chi]
  {
    const auto dec = chiral_decompose(builtin(RepKind::Dirac, Dim::D4), psi4);
    const CVector s{a[0] + b[0], a[1] + b[1]};
    CHECK(oracle::diff(dec.psi_plus, CVector{0.5 * s[0], 0.5 * s[1], 0.5 * s[0], 0.5 * s[1]}) < 1e-15);
    const CVector dfr{a[0] - b[0], a[1] - b[1]};
    CHECK(oracle::diff(dec.psi_minus, CVector{0.5 * dfr[0], 0.5 * dfr[1], -0.5 * dfr[0], -0.5 * dfr[1]}) < 1e-15);
  }
  // Weyl: [phi1; 0]
  {
    const auto dec = chiral_decompose(builtin(RepKind::Weyl, Dim::D4), psi4);
    CHECK(oracle::diff(dec.psi_plus, CVector{a[0], a[1], 0.0, 0.0}) == 0.0);
    CHECK(oracle::diff(dec.psi_minus, CVector{0.0, 0.0, b[0], b[1]}) == 0.0);
  }
  // Majorana: 1/2 [(1 + sy) phi1; (1 - sy) phi2]
  {
    const auto dec = chiral_decompose(builtin(RepKind::Majorana, Dim::D4), psi4);
    const CVector u = mat_vec(0.5 * (tables::id2() + tables::sy()), a);
    const CVector l = mat_vec(0.5 * (tables::id2() - tables::sy()), b);
    CHECK(oracle::diff(dec.psi_plus, CVector{u[0], u[1], l[0], l[1]}) < 1e-15);
    const CVector u2 = mat_vec(0.5 * (tables::id2() - tables::sy()), a);
    const CVector l2 = mat_vec(0.5 * (tables::id2() + tables::sy()), b);
    CHECK(oracle::diff(dec.psi_minus, CVector{u2[0], u2[1], l2[0], l2[1]}) < 1e-15);
  }
  // 1+1
  const CVector psi2{a[0], b[0]};
  {
    const auto dec = chiral_decompose(builtin(RepKind::Dirac, Dim::D2), psi2);
    CHECK(oracle::diff(dec.psi_plus, CVector{0.5 * (a[0] + b[0]), 0.5 * (a[0] + b[0])}) < 1e-15);
    CHECK(oracle::diff(dec.psi_minus, CVector{0.5 * (a[0] - b[0]), -0.5 * (a[0] - b[0])}) < 1e-15);
    const auto decm = chiral_decompose(builtin(RepKind::Majorana, Dim::D2), psi2);
    CHECK(oracle::diff(decm.psi_plus, CVector{0.5 * (a[0] + b[0]), 0.5 * (a[0] + b[0])}) < 1e-15);
    const auto decw = chiral_decompose(builtin(RepKind::Weyl, Dim::D2), psi2);
    CHECK(oracle::diff(decw.psi_plus, CVector{a[0], 0.0}) == 0.0);
  }
  for (Dim d : kDims)
    for (RepKind k : kKinds) {
      const RepSpec rep = builtin(k, d);
      CHECK(projector_algebra_residual(rep) <= 1e-12);
      const CVector psi = rng.vec(rep.spinor_size());
      const auto dec = chiral_decompose(rep, psi);
      CVector sum(psi.size());
      for (std::size_t i = 0; i < psi.size(); ++i) sum[i] = dec.psi_plus[i] + dec.psi_minus[i];
      CHECK(oracle::diff(sum, psi) < 1e-15);
    }
}

TEST_CASE("charge conjugation swaps chirality in 3+1 and keeps it in 1+1") {
  oracle::Rng rng(34);
  for (Dim d : kDims)
    for (RepKind k : kKinds) {
      const RepSpec rep = builtin(k, d);
      const Projectors p = chiral_projectors(rep);
      CHECK(chirality_cc_residual(rep) <= 1e-12);
      for (int i = 0; i < 100; ++i) {
        const CVector psi = rng.vec(rep.spinor_size());
        const CcChiralityReport r = cc_chirality_relation(rep, psi);
        CHECK(r.swapped_pairing == (d == Dim::D4));
        CHECK(r.max() <= 1e-12);
        // test-side: (P+ psi)_C against P(+/-) psi_C
        const CVector lhs = mat_vec(rep.charge_conjugation, conjv(mat_vec(p.plus, psi)));
        const CVector psic = mat_vec(rep.charge_conjugation, conjv(psi));
        const CVector rhs = mat_vec(d == Dim::D4 ? p.minus : p.plus, psic);
        CHECK(oracle::diff(lhs, rhs) < 1e-14);
      }
    }
}

TEST_CASE("sector matrices reproduce the 3+1 tables") {
  const SectorMatrices dirac = sector_matrices(builtin(RepKind::Dirac, Dim::D4));
  check_list(dirac.capital_gamma, tables::capital_gamma_dirac(), 1e-12);
  check_list(dirac.capital_lambda, tables::capital_lambda_dirac(), 1e-12);
  CHECK(dirac.eta.empty());

  const SectorMatrices weyl = sector_matrices(builtin(RepKind::Weyl, Dim::D4));
  check_list(weyl.capital_gamma, tables::capital_gamma_weyl(), 1e-12);
  check_list(weyl.capital_lambda, tables::capital_lambda_weyl(), 1e-12);
  check_list(weyl.eta, tables::eta(), 1e-12);
  check_list(weyl.xi, tables::xi(), 1e-12);

  const SectorMatrices maj = sector_matrices(builtin(RepKind::Majorana, Dim::D4));
  check_list(maj.capital_gamma, tables::capital_gamma_majorana(), 1e-12);
  check_list(maj.capital_lambda, tables::capital_lambda_majorana(), 1e-12);
}

TEST_CASE("sector matrices reproduce the 1+1 chiral gammas") {
  const std::pair<RepKind, tables::Chiral2> rows[] = {{RepKind::Dirac, tables::chiral2_dirac()},
                                                      {RepKind::Weyl, tables::chiral2_weyl()},
                                                      {RepKind::Majorana, tables::chiral2_majorana()}};
  for (const auto& [k, want] : rows) {
    const RepSpec rep = builtin(k, Dim::D2);
    const SectorMatrices s = sector_matrices(rep);
    CHECK(oracle::diff(s.gamma_plus[0], want.plus0) <= 1e-12);
    CHECK(oracle::diff(s.gamma_plus[1], -1.0 * want.plus0) <= 1e-12);
    CHECK(oracle::diff(s.gamma_minus[0], want.minus0) <= 1e-12);
    CHECK(oracle::diff(s.gamma_minus[1], want.minus0) <= 1e-12);
    CHECK(s.capital_gamma.empty());
    CHECK(chiral_gamma_residual(rep, s) <= 1e-12);
    // nilpotent sectors: (gamma_+^0)^2 = 0
    CHECK(oracle::diff(oracle::multiply(want.plus0, want.plus0), CMatrix::zero(2, 2)) < 1e-15);
  }
}

TEST_CASE("conjugate anticommutator identities") {
  for (RepKind k : kKinds) {
    const RepSpec rep = builtin(k, Dim::D4);
    const SectorMatrices s = sector_matrices(rep);
    CHECK(capital_gamma_residual(rep, s) <= 1e-12);
    CHECK(capital_lambda_residual(rep, s) <= 1e-12);
    // test-side evaluation on the tabulated Capital Gamma against P+
    const auto g = k == RepKind::Dirac ? tables::capital_gamma_dirac()
                   : k == RepKind::Weyl ? tables::capital_gamma_weyl()
                                        : tables::capital_gamma_majorana();
    const CMatrix pp = chiral_projectors(rep).plus;
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) {
        const CMatrix lhs = oracle::multiply(conj(g[mu]), g[nu]) + oracle::multiply(conj(g[nu]), g[mu]);
        CHECK(oracle::diff(lhs, (-2.0 * metric(mu, nu)) * pp) < 1e-14);
      }
  }
  const SectorMatrices w = sector_matrices(builtin(RepKind::Weyl, Dim::D4));
  CHECK(eta_residual(w) <= 1e-12);
  CHECK(xi_residual(w) <= 1e-12);
  // a perturbed eta set fails
  auto bad = tables::eta();
  bad[1] = 1.01 * bad[1];
  CHECK(conjugate_anticommutator_residual(bad, tables::id2()) > 1e-3);

  const RepSpec m4 = builtin(RepKind::Majorana, Dim::D4);
  CHECK(majorana_collapse_residual(m4, sector_matrices(m4)) <= 1e-12);
  const SectorMatrices d2 = sector_matrices(builtin(RepKind::Dirac, Dim::D2));
  CHECK_THROWS_AS(capital_gamma_residual(builtin(RepKind::Dirac, Dim::D2), d2), UnsupportedError);
  CHECK_THROWS_AS(eta_residual(sector_matrices(builtin(RepKind::Dirac, Dim::D4))), UnsupportedError);
}

TEST_CASE("sector identities hold in randomly rotated representations") {
  oracle::Rng rng(35);
  for (RepKind k : kKinds) {
    const RepSpec rep = builtin(k, Dim::D4);
    for (int i = 0; i < 5; ++i) {
      const CMatrix a = rng.mat(4, 4);
      const RepSpec t = similarity_transform(rep, expm(a - dagger(a)), "rot");
      const SectorMatrices s = sector_matrices(t);
      CHECK(capital_gamma_residual(t, s) <= 1e-11);
      CHECK(capital_lambda_residual(t, s) <= 1e-11);
      CHECK(chirality_cc_residual(t) <= 1e-11);
    }
  }
}

#include "majolab/reps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "majolab/errors.hpp"

namespace majolab {

using namespace pauli;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

GammaSet builtin_gammas(RepKind kind, Dim dim) {
  if (dim == Dim::D2) {
    switch (kind) {
      case RepKind::Dirac: return GammaSet(Dim::D2, {Z(), kI * Y()});
      case RepKind::Weyl: return GammaSet(Dim::D2, {X(), -kI * Y()});
      case RepKind::Majorana: return GammaSet(Dim::D2, {Y(), -kI * Z()});
      default: break;
    }
  } else {
    const CMatrix sig[3] = {X(), Y(), Z()};
    switch (kind) {
      case RepKind::Dirac:
      case RepKind::Weyl: {
        std::vector<CMatrix> g;
        g.push_back(kind == RepKind::Dirac ? kron(Z(), I2()) : -kron(X(), I2()));
        for (const auto& s : sig) g.push_back(kI * kron(Y(), s));
        return GammaSet(Dim::D4, std::move(g));
      }
      case RepKind::Majorana:
        return GammaSet(Dim::D4, {kron(X(), Y()), kI * kron(I2(), Z()), -kI * kron(Y(), Y()), -kI * kron(I2(), X())});
      default: break;
    }
  }
  throw UsageError("no built-in representation for this kind");
}

void require_unitary(const CMatrix& s, const char* what) {
  if (!s.is_square() || unitarity_defect(s) > 1e-10) throw UsageError(std::string(what) + ": matrix is not unitary");
}

std::string kind_name(RepKind k) { return std::string(to_string(k)); }

}  // namespace

std::string_view to_string(RepKind k) {
  switch (k) {
    case RepKind::Dirac: return "dirac";
    case RepKind::Weyl: return "weyl";
    case RepKind::Majorana: return "majorana";
    case RepKind::Custom: return "custom";
  }
  return "custom";
}

RepKind rep_kind_from_string(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "dirac") return RepKind::Dirac;
  if (lower == "weyl") return RepKind::Weyl;
  if (lower == "majorana") return RepKind::Majorana;
  throw UsageError("unknown representation '" + std::string(s) + "' (expected dirac, weyl or majorana)");
}

CMatrix builtin_to_majorana(RepKind kind, Dim dim) {
  if (dim == Dim::D2) {
    switch (kind) {
      case RepKind::Dirac: return kInvSqrt2 * (I2() + kI * X());
      case RepKind::Weyl: return 0.5 * (kI * I2() + X() + Y() + Z());
      case RepKind::Majorana: return I2();
      default: break;
    }
  } else {
    switch (kind) {
      case RepKind::Dirac: return kInvSqrt2 * (kron(X(), Y()) + kron(Z(), I2()));
      case RepKind::Weyl:
        return 0.5 * (kron(X(), Y()) + kron(Z(), Y()) + kron(Z(), I2()) - kron(X(), I2()));
      case RepKind::Majorana: return CMatrix::identity(4);
      default: break;
    }
  }
  throw UsageError("no built-in similarity matrix for this kind");
}

CMatrix dirac_to_weyl(Dim dim) {
  if (dim == Dim::D2) return kInvSqrt2 * (X() + Z());
  return kInvSqrt2 * (kron(I2(), I2()) + kI * kron(Y(), I2()));
}

CMatrix tabulated_charge_conjugation(RepKind kind, Dim dim) {
  if (dim == Dim::D2) {
    switch (kind) {
      case RepKind::Dirac: return -kI * X();
      case RepKind::Weyl: return -kI * Z();
      case RepKind::Majorana: return I2();
      default: break;
    }
  } else {
    switch (kind) {
      case RepKind::Dirac:
      case RepKind::Weyl: return -kI * kron(Y(), Y());
      case RepKind::Majorana: return CMatrix::identity(4);
      default: break;
    }
  }
  throw UsageError("no tabulated charge-conjugation matrix for this kind");
}

RepSpec builtin(RepKind kind, Dim dim) {
  if (kind == RepKind::Custom) throw UsageError("builtin: custom is not a built-in representation");
  RepSpec r{kind_name(kind), kind, builtin_gammas(kind, dim), builtin_to_majorana(kind, dim), {}};
  r.charge_conjugation = derive_sc(*r.to_majorana);
  return r;
}

RepSpec builtin(std::string_view name, Dim dim) { return builtin(rep_kind_from_string(name), dim); }

RepSpec make_custom(std::string name, GammaSet gammas, std::optional<CMatrix> to_majorana,
                    std::optional<CMatrix> charge_conjugation) {
  const std::size_t n = spinor_size(gammas.dim());
  if (!to_majorana && !charge_conjugation)
    throw UsageError("custom representation needs a similarity matrix to the Majorana rep or an explicit S_C");
  if (to_majorana && (to_majorana->rows() != n || to_majorana->cols() != n))
    throw UsageError("custom representation: similarity matrix has the wrong shape");
  if (charge_conjugation && (charge_conjugation->rows() != n || charge_conjugation->cols() != n))
    throw UsageError("custom representation: S_C has the wrong shape");
  RepSpec r{std::move(name), RepKind::Custom, std::move(gammas), std::move(to_majorana), {}};
  r.charge_conjugation = charge_conjugation ? *charge_conjugation : derive_sc(*r.to_majorana);
  return r;
}

RepSpec similarity_transform(const RepSpec& rep, const CMatrix& s, std::string name) {
  require_unitary(s, "similarity_transform");
  if (s.rows() != rep.spinor_size()) throw UsageError("similarity_transform: shape mismatch");
  const CMatrix s_inv = dagger(s);
  std::vector<CMatrix> g;
  for (const auto& gm : rep.gammas.gammas()) g.push_back(s * gm * s_inv);
  RepSpec out{name.empty() ? rep.name + "'" : std::move(name), RepKind::Custom, GammaSet(rep.dim(), std::move(g)),
              std::nullopt, transport_sc(rep.charge_conjugation, s)};
  if (rep.to_majorana) out.to_majorana = *rep.to_majorana * s_inv;
  return out;
}

RepSpec with_charge_conjugation(const RepSpec& rep, const CMatrix& s_c, std::string name) {
  if (s_c.rows() != rep.spinor_size() || s_c.cols() != rep.spinor_size())
    throw UsageError("with_charge_conjugation: shape mismatch");
  RepSpec out = rep;
  out.kind = RepKind::Custom;
  out.name = name.empty() ? rep.name + "/sc" : std::move(name);
  out.charge_conjugation = s_c;
  return out;
}

CMatrix transport_sc(const CMatrix& s_c, const CMatrix& s) {
  if (!s.is_square() || !s_c.is_square() || s.rows() != s_c.rows())
    throw UsageError("transport_sc: shapes do not conform");
  return s * s_c * inverse(conj(s));
}

CMatrix derive_sc(const CMatrix& to_majorana) {
  require_unitary(to_majorana, "derive_sc");
  return dagger(to_majorana) * conj(to_majorana);
}

double verify_cc_defining(const CMatrix& s_c, const GammaSet& set) {
  const std::size_t n = spinor_size(set.dim());
  if (s_c.rows() != n || s_c.cols() != n) throw UsageError("verify_cc_defining: shape mismatch");
  CMatrix s_inv;
  try {
    s_inv = inverse(s_c);
  } catch (const NumericalError&) {
    throw UsageError("verify_cc_defining: S_C is singular");
  }
  double worst = 0.0;
  for (const auto& g : set.gammas()) worst = std::max(worst, max_abs_diff(s_c * conj(-g) * s_inv, g));
  return worst;
}

CVector charge_conjugate(const RepSpec& rep, std::span<const cplx> psi) {
  if (psi.size() != rep.spinor_size()) throw UsageError("charge_conjugate: spinor length does not match rep");
  return rep.charge_conjugation * conj(psi);
}

ScVariants sc_variants(const RepSpec& rep) {
  if (rep.dim() != Dim::D4) throw UnsupportedError("sc_variants: defined for 3+1 representations");
  const CMatrix& g2 = rep.gammas[2];
  return {g2, -g2, kI * g2, -kI * g2};
}

RepSpec weyl_with_real_sc() {
  const RepSpec w = builtin(RepKind::Weyl, Dim::D4);
  return with_charge_conjugation(w, sc_variants(w).minus_i_gamma2, "weyl/real-sc");
}

RepSpec weyl_beta_flipped(std::optional<CMatrix> s_c) {
  RepSpec r = similarity_transform(weyl_with_real_sc(), kron(Z(), I2()), "weyl/beta-flipped");
  if (s_c) r.charge_conjugation = *s_c;
  return r;
}

RepSpec weyl_chirality_flipped() {
  return similarity_transform(weyl_with_real_sc(), kron(Y(), I2()), "weyl/chirality-flipped");
}

RepSpec majorana_conjugated() {
  return similarity_transform(builtin(RepKind::Majorana, Dim::D4), kron(Z(), I2()), "majorana/conjugated");
}

double RepInvariants::max() const {
  return std::max({clifford, hermiticity, gamma_unitarity, cc_defining, cc_unitarity, cc_inverse_conjugate,
                   to_majorana_unitarity, to_majorana_image});
}

RepInvariants check_invariants(const RepSpec& rep) {
  RepInvariants inv;
  inv.clifford = clifford_residual(rep.gammas);
  inv.hermiticity = hermiticity_residual(rep.gammas);
  inv.gamma_unitarity = unitarity_residual(rep.gammas);
  inv.cc_defining = verify_cc_defining(rep.charge_conjugation, rep.gammas);
  inv.cc_unitarity = unitarity_defect(rep.charge_conjugation);
  inv.cc_inverse_conjugate = max_abs_diff(inverse(rep.charge_conjugation), conj(rep.charge_conjugation));
  if (rep.to_majorana) {
    inv.to_majorana_unitarity = unitarity_defect(*rep.to_majorana);
    for (const auto& g : rep.gammas.gammas())
      inv.to_majorana_image = std::max(inv.to_majorana_image, max_real(*rep.to_majorana * g * dagger(*rep.to_majorana)));
  }
  return inv;
}

}  // namespace majolab

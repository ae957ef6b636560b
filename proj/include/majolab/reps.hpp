#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "majolab/clifford.hpp"
#include "majolab/matcore.hpp"

namespace majolab {

enum class RepKind { Dirac, Weyl, Majorana, Custom };

std::string_view to_string(RepKind k);
RepKind rep_kind_from_string(std::string_view s);

/// A gamma representation together with its similarity matrix into the
/// Majorana representation and its charge-conjugation matrix.
struct RepSpec {
  std::string name;
  RepKind kind = RepKind::Custom;
  GammaSet gammas;
  std::optional<CMatrix> to_majorana;
  CMatrix charge_conjugation;

  Dim dim() const { return gammas.dim(); }
  std::size_t spinor_size() const { return majolab::spinor_size(gammas.dim()); }
};

/// Built-in Dirac, Weyl and Majorana representations in 1+1 and 3+1.
RepSpec builtin(RepKind kind, Dim dim);
RepSpec builtin(std::string_view name, Dim dim);

/// Custom representation; at least one of to_majorana or charge_conjugation is required.
/// When only to_majorana is given, S_C is derived from it.
RepSpec make_custom(std::string name, GammaSet gammas, std::optional<CMatrix> to_majorana,
                    std::optional<CMatrix> charge_conjugation);

/// gamma' = S gamma S^-1, S_C transported, to_majorana composed.
RepSpec similarity_transform(const RepSpec& rep, const CMatrix& s, std::string name = {});
/// Same gammas, different (phase) choice of S_C.
RepSpec with_charge_conjugation(const RepSpec& rep, const CMatrix& s_c, std::string name = {});

/// S S_C (S*)^-1.
CMatrix transport_sc(const CMatrix& s_c, const CMatrix& s);
/// S^dagger S* for S taking the representation to the Majorana one.
CMatrix derive_sc(const CMatrix& to_majorana);
/// max_mu |S_C (-gamma^mu)* S_C^-1 - gamma^mu|.
double verify_cc_defining(const CMatrix& s_c, const GammaSet& set);
/// S_C psi*.
CVector charge_conjugate(const RepSpec& rep, std::span<const cplx> psi);

/// Similarity matrix from the built-in rep of the given kind into the Majorana rep.
CMatrix builtin_to_majorana(RepKind kind, Dim dim);
/// Similarity matrix from the Dirac rep into the Weyl rep.
CMatrix dirac_to_weyl(Dim dim);
/// S_C as printed in the representation tables (independent of derive_sc).
CMatrix tabulated_charge_conjugation(RepKind kind, Dim dim);

/// Alternative S_C choices built from gamma^2 in 3+1.
struct ScVariants {
  CMatrix plus_gamma2;
  CMatrix minus_gamma2;
  CMatrix plus_i_gamma2;
  CMatrix minus_i_gamma2;
};
ScVariants sc_variants(const RepSpec& rep);

/// Literature Weyl conventions used in the two-component cross-checks.
/// The built-in Weyl rep with S_C = -i gamma^2 = +sigma_y x sigma_y.
RepSpec weyl_with_real_sc();
/// beta' = +sigma_x x 1, alpha' = sigma_z x sigma; obtained with S = sigma_z x 1.
/// S_C' defaults to -sigma_y x sigma_y; pass a different one for the other common phase.
RepSpec weyl_beta_flipped(std::optional<CMatrix> s_c = std::nullopt);
/// beta' = +sigma_x x 1, gamma5' = -sigma_z x 1; obtained with S = sigma_y x 1, S_C' = -sigma_y x sigma_y.
RepSpec weyl_chirality_flipped();
/// Majorana rep conjugated by sigma_z x 1 (an older Majorana convention).
RepSpec majorana_conjugated();

/// Residuals of the RepSpec invariants.
struct RepInvariants {
  double clifford = 0.0;
  double hermiticity = 0.0;
  double gamma_unitarity = 0.0;
  double cc_defining = 0.0;
  double cc_unitarity = 0.0;
  double cc_inverse_conjugate = 0.0;
  double to_majorana_unitarity = 0.0;
  double to_majorana_image = 0.0;  // max |Re(S gamma S^-1)|
  double max() const;
};
RepInvariants check_invariants(const RepSpec& rep);

}  // namespace majolab

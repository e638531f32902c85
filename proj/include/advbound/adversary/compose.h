#pragma once

#include <vector>

#include "advbound/adversary/adversary_matrix.h"
#include "advbound/adversary/minimax.h"
#include "advbound/boolfn/composition.h"
#include "advbound/specmat/spectral.h"

namespace advbound::adversary {

using boolfn::CompositionSpec;

/// Gamma_h[x,y] = Gamma_f[x~,y~] * prod_i F_i[x^i,y^i] with
/// F_i = Gamma_{g_i} + ||Gamma_{g_i}|| I.
///
/// Same-class blocks of each factor pick up the ||Gamma_{g_i}|| I part and
/// cross-class blocks the Gamma_{g_i} part, so this is the block-tensor
/// construction written entrywise. The result is labeled by
/// compose_functions(spec). Throws std::invalid_argument when a matrix does
/// not belong to the corresponding function of `spec`, is invalid, or has a
/// negative entry.
AdversaryMatrix compose_gamma(const AdversaryMatrix& gamma_f, const std::vector<AdversaryMatrix>& gammas_g,
                              const CompositionSpec& spec, const specmat::EigenOptions& opts = {},
                              int size_cap = boolfn::kDefaultSizeCap);

/// A unit eigenvector of an adversary matrix split by output class.
struct EigvecParts {
  std::vector<double> whole;
  std::vector<double> half0;
  std::vector<double> half1;
};

inline constexpr double kHalfMassTolerance = 1e-8;

/// Restricts `delta` to g^{-1}(0) and g^{-1}(1). Does not validate.
EigvecParts split_eigenvector(const BooleanFunction& g, const specmat::SpectralResult& delta);

/// Throws std::invalid_argument unless whole = half0 + half1 and both halves
/// carry squared mass 1/2 within kHalfMassTolerance.
void check_half_mass(const EigvecParts& parts);

/// delta_h[x] = delta_f[x~] * prod_i delta_{g_i}^{x~_i}[x^i], indexed like the
/// domain of compose_functions(spec). Its squared norm is 2^-k.
std::vector<double> compose_eigenvector(const specmat::SpectralResult& delta_f,
                                        const std::vector<EigvecParts>& deltas_g, const CompositionSpec& spec,
                                        int size_cap = boolfn::kDefaultSizeCap);

struct MaskedCompositionReport {
  int global_bit = 0;
  int block = 0;        // p, 1-based
  int inner_bit = 0;    // q, 1-based
  /// Entrywise identity for Gamma_h o D_l.
  double entrywise_max_abs_diff = 0.0;
  double entrywise_scale = 0.0;
  bool entrywise_ok = false;
  /// ||Gamma_h o D_l|| against ||Gamma_f o D_p|| ||Gamma_gp o D_q|| prod_{i != p} ||Gamma_gi||.
  double masked_norm = 0.0;
  double masked_norm_product = 0.0;
  bool norm_ok = false;
  /// ||Gamma_h|| / ||Gamma_h o D_l|| against
  /// (||Gamma_f|| / ||Gamma_f o D_p||) (||Gamma_gp|| / ||Gamma_gp o D_q||).
  double ratio_composed = 0.0;
  double ratio_factored = 0.0;
  bool ratio_ok = false;
  bool pass = false;
};

inline constexpr double kCompositionRelTolerance = 1e-8;

MaskedCompositionReport masked_compose_check(const AdversaryMatrix& gamma_f,
                                             const std::vector<AdversaryMatrix>& gammas_g,
                                             const CompositionSpec& spec, int global_bit,
                                             const specmat::EigenOptions& opts = {},
                                             int size_cap = boolfn::kDefaultSizeCap);

/// p^h_x(l) = p^f_{x~}(i) * p^{g_i}_{x^i}(j) where bit l is bit j of block i.
MinimaxWitness compose_minimax(const MinimaxWitness& p_f, const std::vector<MinimaxWitness>& ps_g,
                               const CompositionSpec& spec, int size_cap = boolfn::kDefaultSizeCap);

}  // namespace advbound::adversary

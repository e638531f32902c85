#include "advbound/adversary/compose.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace advbound::adversary {

namespace {

// Domain of h together with, for every x in it, the index of x~ in the outer
// domain and of each block x^i in its inner domain.
struct BlockIndex {
  BooleanFunction h;
  std::vector<std::size_t> outer;
  std::vector<std::vector<std::size_t>> inner;
};

BlockIndex index_blocks(const CompositionSpec& spec, int size_cap) {
  BlockIndex out{boolfn::compose_functions(spec, size_cap), {}, {}};
  out.outer.reserve(out.h.size());
  out.inner.reserve(out.h.size());
  for (const auto& x : out.h.domain()) {
    auto split = boolfn::split_input(x, spec);
    out.outer.push_back(*spec.outer().index_of(split.tilde));
    std::vector<std::size_t> blocks;
    blocks.reserve(spec.block_count());
    for (std::size_t i = 0; i < spec.block_count(); ++i) blocks.push_back(*spec.inner(i).index_of(split.blocks[i]));
    out.inner.push_back(std::move(blocks));
  }
  return out;
}

void require_component(const AdversaryMatrix& gamma, const BooleanFunction& expected, const std::string& name) {
  if (!(gamma.function == expected)) {
    throw std::invalid_argument(name + " adversary matrix is not over the function named in the composition");
  }
  const auto report = validate(gamma);
  for (const auto& v : report.violations) {
    if (v.kind != Violation::Kind::kAllZero) {
      throw std::invalid_argument(name + " adversary matrix is invalid: " + v.message);
    }
  }
}

// Gamma + ||Gamma|| I.
SymMatrix lift_with_identity(const SymMatrix& gamma, double norm) {
  SymMatrix out = gamma;
  for (std::size_t r = 0; r < out.dim(); ++r) out.set(r, r, gamma(r, r) + norm);
  return out;
}

bool relatively_close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

double ratio(double num, double den) {
  return den > 0.0 ? num / den : std::numeric_limits<double>::infinity();
}

double norm_of(const SymMatrix& m, const specmat::EigenOptions& opts) {
  return m.is_zero() ? 0.0 : specmat::spectral_norm(m, opts).norm;
}

}  // namespace

AdversaryMatrix compose_gamma(const AdversaryMatrix& gamma_f, const std::vector<AdversaryMatrix>& gammas_g,
                              const CompositionSpec& spec, const specmat::EigenOptions& opts, int size_cap) {
  if (gammas_g.size() != spec.block_count()) {
    throw std::invalid_argument("need one inner adversary matrix per block");
  }
  require_component(gamma_f, spec.outer(), "outer");
  std::vector<SymMatrix> lifted;
  lifted.reserve(gammas_g.size());
  for (std::size_t i = 0; i < gammas_g.size(); ++i) {
    require_component(gammas_g[i], spec.inner(i), "inner " + std::to_string(i + 1));
    lifted.push_back(lift_with_identity(gammas_g[i].matrix, norm_of(gammas_g[i].matrix, opts)));
  }

  const auto idx = index_blocks(spec, size_cap);
  AdversaryMatrix out{idx.h, SymMatrix(idx.h.domain())};
  const std::size_t n = idx.h.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double v = gamma_f.matrix(idx.outer[a], idx.outer[b]);
      for (std::size_t i = 0; i < lifted.size() && v != 0.0; ++i) v *= lifted[i](idx.inner[a][i], idx.inner[b][i]);
      if (v != 0.0) out.matrix.set(a, b, v);
    }
  }
  return out;
}

EigvecParts split_eigenvector(const BooleanFunction& g, const specmat::SpectralResult& delta) {
  if (delta.vector.size() != g.size()) {
    throw std::invalid_argument("eigenvector length does not match the function domain");
  }
  EigvecParts parts{delta.vector, std::vector<double>(g.size(), 0.0), std::vector<double>(g.size(), 0.0)};
  for (std::size_t k = 0; k < g.size(); ++k) (g.value_at(k) == 0 ? parts.half0 : parts.half1)[k] = delta.vector[k];
  return parts;
}

void check_half_mass(const EigvecParts& parts) {
  if (parts.half0.size() != parts.whole.size() || parts.half1.size() != parts.whole.size()) {
    throw std::invalid_argument("eigenvector halves have mismatched lengths");
  }
  double m0 = 0.0;
  double m1 = 0.0;
  for (std::size_t k = 0; k < parts.whole.size(); ++k) {
    if (parts.whole[k] != parts.half0[k] + parts.half1[k] || (parts.half0[k] != 0.0 && parts.half1[k] != 0.0)) {
      throw std::invalid_argument("eigenvector halves do not partition the whole vector");
    }
    m0 += parts.half0[k] * parts.half0[k];
    m1 += parts.half1[k] * parts.half1[k];
  }
  if (std::abs(m0 - 0.5) > kHalfMassTolerance || std::abs(m1 - 0.5) > kHalfMassTolerance) {
    throw std::invalid_argument("eigenvector halves carry squared mass " + std::to_string(m0) + " and " +
                                std::to_string(m1) + ", expected 1/2 each");
  }
}

std::vector<double> compose_eigenvector(const specmat::SpectralResult& delta_f,
                                        const std::vector<EigvecParts>& deltas_g, const CompositionSpec& spec,
                                        int size_cap) {
  if (deltas_g.size() != spec.block_count()) {
    throw std::invalid_argument("need one inner eigenvector per block");
  }
  if (delta_f.vector.size() != spec.outer().size()) {
    throw std::invalid_argument("outer eigenvector length does not match the outer domain");
  }
  for (std::size_t i = 0; i < deltas_g.size(); ++i) {
    if (deltas_g[i].whole.size() != spec.inner(i).size()) {
      throw std::invalid_argument("inner eigenvector " + std::to_string(i + 1) + " has wrong length");
    }
    check_half_mass(deltas_g[i]);
  }
  const auto idx = index_blocks(spec, size_cap);
  std::vector<double> out(idx.h.size(), 0.0);
  for (std::size_t a = 0; a < idx.h.size(); ++a) {
    double v = delta_f.vector[idx.outer[a]];
    const auto tilde = spec.outer().domain()[idx.outer[a]];
    for (std::size_t i = 0; i < deltas_g.size(); ++i) {
      const auto& half = tilde.bit(static_cast<int>(i) + 1) == 0 ? deltas_g[i].half0 : deltas_g[i].half1;
      v *= half[idx.inner[a][i]];
    }
    out[a] = v;
  }
  return out;
}

MaskedCompositionReport masked_compose_check(const AdversaryMatrix& gamma_f,
                                             const std::vector<AdversaryMatrix>& gammas_g,
                                             const CompositionSpec& spec, int global_bit,
                                             const specmat::EigenOptions& opts, int size_cap) {
  MaskedCompositionReport rep;
  rep.global_bit = global_bit;
  std::tie(rep.block, rep.inner_bit) = spec.locate(global_bit);
  const auto p = static_cast<std::size_t>(rep.block - 1);

  const auto gamma_h = compose_gamma(gamma_f, gammas_g, spec, opts, size_cap);
  const auto masked_h = specmat::hadamard(gamma_h.matrix, specmat::difference_mask(gamma_h.matrix.labels(), global_bit));

  // Right-hand side, built entrywise from the component matrices.
  const auto masked_f = specmat::hadamard(gamma_f.matrix, specmat::difference_mask(gamma_f.matrix.labels(), rep.block));
  const auto masked_gp =
      specmat::hadamard(gammas_g[p].matrix, specmat::difference_mask(gammas_g[p].matrix.labels(), rep.inner_bit));
  std::vector<double> norms_g;
  std::vector<SymMatrix> lifted;
  for (const auto& g : gammas_g) {
    norms_g.push_back(norm_of(g.matrix, opts));
    lifted.push_back(lift_with_identity(g.matrix, norms_g.back()));
  }
  const auto idx = index_blocks(spec, size_cap);
  const std::size_t n = idx.h.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double v = masked_f(idx.outer[a], idx.outer[b]) * masked_gp(idx.inner[a][p], idx.inner[b][p]);
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        if (i != p) v *= lifted[i](idx.inner[a][i], idx.inner[b][i]);
      }
      const double lhs = masked_h(a, b);
      rep.entrywise_max_abs_diff = std::max(rep.entrywise_max_abs_diff, std::abs(lhs - v));
      rep.entrywise_scale = std::max({rep.entrywise_scale, std::abs(lhs), std::abs(v)});
    }
  }
  rep.entrywise_ok = rep.entrywise_max_abs_diff <= kCompositionRelTolerance * rep.entrywise_scale;

  const double norm_h = norm_of(gamma_h.matrix, opts);
  const double norm_f = norm_of(gamma_f.matrix, opts);
  const double norm_masked_f = norm_of(masked_f, opts);
  const double norm_masked_gp = norm_of(masked_gp, opts);
  rep.masked_norm = norm_of(masked_h, opts);
  rep.masked_norm_product = norm_masked_f * norm_masked_gp;
  for (std::size_t i = 0; i < norms_g.size(); ++i) {
    if (i != p) rep.masked_norm_product *= norms_g[i];
  }
  rep.norm_ok = relatively_close(rep.masked_norm, rep.masked_norm_product, kCompositionRelTolerance);

  rep.ratio_composed = ratio(norm_h, rep.masked_norm);
  rep.ratio_factored = ratio(norm_f, norm_masked_f) * ratio(norms_g[p], norm_masked_gp);
  rep.ratio_ok = relatively_close(rep.ratio_composed, rep.ratio_factored, kCompositionRelTolerance);
  rep.pass = rep.entrywise_ok && rep.norm_ok && rep.ratio_ok;
  return rep;
}

MinimaxWitness compose_minimax(const MinimaxWitness& p_f, const std::vector<MinimaxWitness>& ps_g,
                               const CompositionSpec& spec, int size_cap) {
  if (ps_g.size() != spec.block_count()) throw std::invalid_argument("need one inner witness per block");
  if (!(p_f.function == spec.outer())) {
    throw std::invalid_argument("outer witness is not over the outer function");
  }
  check_witness(p_f);
  for (std::size_t i = 0; i < ps_g.size(); ++i) {
    if (!(ps_g[i].function == spec.inner(i))) {
      throw std::invalid_argument("witness " + std::to_string(i + 1) + " is not over inner function " +
                                  std::to_string(i + 1));
    }
    check_witness(ps_g[i]);
  }
  const auto idx = index_blocks(spec, size_cap);
  MinimaxWitness out{idx.h, {}};
  out.p.reserve(idx.h.size());
  for (std::size_t a = 0; a < idx.h.size(); ++a) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(spec.total_arity()));
    for (std::size_t i = 0; i < ps_g.size(); ++i) {
      const double outer_weight = p_f.p[idx.outer[a]][i];
      for (double inner_weight : ps_g[i].p[idx.inner[a][i]]) row.push_back(outer_weight * inner_weight);
    }
    out.p.push_back(std::move(row));
  }
  return out;
}

}  // namespace advbound::adversary

#pragma once

#include "homkit/modules/fp_module.hpp"
#include "homkit/modules/normalize.hpp"
#include "homkit/modules/ops.hpp"

#include <vector>

namespace homkit {

/// Hom(source, target) with a codec between its elements and ModuleMaps.
/// Raw coordinate k stands for the cyclic piece Hom(R/(d_j), R/(e_i)) of order
/// g_k; its generator sends generator j to (e_i / g_k) times generator i.
class HomModule {
public:
  HomModule(FpModule source, FpModule target) : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.ring() == target_.ring())) throw std::invalid_argument("Hom between modules over different rings");
    const RingSpec &ring = source_.ring();
    for (std::size_t j = 0; j < source_.rank(); ++j)
      for (std::size_t i = 0; i < target_.rank(); ++i) {
        const Integer &d = source_.factor(j), &e = target_.factor(i);
        Integer g;
        if (e == 0) {
          if (d != 0) continue;
          g = 0;
        } else {
          g = d == 0 ? e : gcd(d, e);
        }
        if (g == 1) continue;
        pieces_.push_back({i, j, g, e == 0 ? Integer(1) : Integer(e / g)});
      }
    IntMatrix rel(pieces_.size(), pieces_.size());
    for (std::size_t k = 0; k < pieces_.size(); ++k) rel(k, k) = pieces_[k].order;
    nz_ = normalize_presentation(ring, pieces_.size(), rel);
  }

  [[nodiscard]] auto module() const -> const FpModule & { return nz_.module; }
  [[nodiscard]] auto source() const -> const FpModule & { return source_; }
  [[nodiscard]] auto target() const -> const FpModule & { return target_; }

  [[nodiscard]] auto decode(const Element &h) const -> ModuleMap {
    IntMatrix m(target_.rank(), source_.rank());
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      Integer r = 0;
      for (std::size_t c = 0; c < h.size(); ++c) r += nz_.from_canonical(k, c) * h[c];
      const auto &p = pieces_[k];
      m(p.row, p.col) = r * p.scale;
    }
    return ModuleMap::trusted(source_, target_, m);
  }

  [[nodiscard]] auto encode(const ModuleMap &f) const -> Element {
    if (!(f.source() == source_) || !(f.target() == target_)) throw std::invalid_argument("encode: map has the wrong source or target");
    Vector raw(pieces_.size(), 0);
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      const auto &p = pieces_[k];
      raw[k] = f.matrix()(p.row, p.col) / p.scale;
    }
    Element h(nz_.module.rank(), 0);
    for (std::size_t c = 0; c < h.size(); ++c)
      for (std::size_t k = 0; k < raw.size(); ++k) h[c] += nz_.to_canonical(c, k) * raw[k];
    return nz_.module.reduce(std::move(h));
  }

  /// The maps corresponding to the canonical generators.
  [[nodiscard]] auto generator_maps() const -> std::vector<ModuleMap> {
    std::vector<ModuleMap> gens;
    for (std::size_t c = 0; c < nz_.module.rank(); ++c) {
      Element e(nz_.module.rank(), 0);
      e[c] = 1;
      gens.push_back(decode(e));
    }
    return gens;
  }

private:
  struct Piece {
    std::size_t row, col;
    Integer order, scale;
  };
  FpModule source_, target_;
  std::vector<Piece> pieces_;
  Normalization nz_;
};

inline auto hom_module(const FpModule &m, const FpModule &n) -> HomModule { return {m, n}; }

/// Hom(f, N): Hom(B, N) -> Hom(A, N) for f: A -> B.
inline auto precompose_map(const ModuleMap &f, const HomModule &from, const HomModule &to) -> ModuleMap {
  std::vector<Element> cols;
  for (const auto &g : from.generator_maps()) cols.push_back(to.encode(g * f));
  return ModuleMap::trusted(from.module(), to.module(), IntMatrix::from_columns(to.module().rank(), cols));
}

/// Hom(M, f): Hom(M, A) -> Hom(M, B) for f: A -> B.
inline auto postcompose_map(const ModuleMap &f, const HomModule &from, const HomModule &to) -> ModuleMap {
  std::vector<Element> cols;
  for (const auto &g : from.generator_maps()) cols.push_back(to.encode(f * g));
  return ModuleMap::trusted(from.module(), to.module(), IntMatrix::from_columns(to.module().rank(), cols));
}

/// Ext^1(M, N) from a free presentation pi: F -> M (F free, pi onto).
inline auto ext1_via(const ModuleMap &pi, const FpModule &n) -> FpModule {
  const FpModule &f = pi.source();
  for (const auto &d : f.factors())
    if (d != f.ring().free_factor()) throw std::invalid_argument("ext1_via needs a free source");
  if (!is_epi(pi)) throw std::invalid_argument("ext1_via needs an onto presentation map");
  auto k = kernel(pi);
  HomModule hf(f, n), hk(k.sub, n);
  return cokernel(precompose_map(k.inclusion, hf, hk)).module;
}

inline auto canonical_presentation(const FpModule &m) -> ModuleMap {
  FpModule f = FpModule::free(m.ring(), m.rank());
  return ModuleMap::trusted(f, m, IntMatrix::identity(m.rank()));
}

inline auto ext1_module(const FpModule &m, const FpModule &n) -> FpModule {
  if (!(m.ring() == n.ring())) throw std::invalid_argument("Ext between modules over different rings");
  return ext1_via(canonical_presentation(m), n);
}

} // namespace homkit

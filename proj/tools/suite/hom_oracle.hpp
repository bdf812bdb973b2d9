#pragma once

// Independent count of degree-e nested tangent vectors through minimal
// generators and first syzygies, for checking the degreewise engine.

#include <map>
#include <stdexcept>
#include <vector>

#include "hilbtan/resolutions.hpp"

namespace hilbtan::oracle {

// Generator/syzygy oracle. A degree-e tuple is determined by the images of
// minimal generators; images must kill every first syzygy, and the image of
// each generator of I^(i+1), written through the generators of I^(i), must
// agree after projection.
template <typename F>
struct GenData {
  std::vector<FreeElement<F>> gens;
  std::vector<FreeElement<F>> syz;
  std::vector<std::size_t> offset;  // unknown offset of each generator image
};

template <typename F>
std::size_t nested_hom_dim(const std::vector<HomogeneousIdeal<F>>& ideals, int e) {
  const F& field = ideals.front().field();
  const RingCtx& ring = *ideals.front().ring();
  auto q = [&](const HomogeneousIdeal<F>& I, int d) -> std::size_t { return d < 0 ? 0 : ring.dim(d) - I.dim(d); };

  std::vector<GenData<F>> data(ideals.size());
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& I = ideals[i];
    for (const auto& g : minimal_generators(I).generators) {
      data[i].gens.push_back({g.degree, to_sparse(field, std::span<const typename F::Elem>(g.coords))});
      data[i].offset.push_back(unknowns);
      unknowns += q(I, g.degree + e);
    }
    data[i].syz = detail::syzygy_generators(field, ring, FreeModule{{0}}, data[i].gens, I.socle_degree() + 2);
  }
  if (unknowns == 0) return 0;

  // a * (image of generator k of ideal i), a a form of degree da given densely,
  // accumulated into equations indexed by the coordinates of (R/I^(i))_{deg}.
  auto add_product = [&](std::vector<std::map<std::uint32_t, typename F::Elem>>& eqs, std::size_t i, std::size_t k,
                         const SparseRow<F>& a, int da, const typename F::Elem& sign) {
    const auto& I = ideals[i];
    int dg = data[i].gens[k].degree + e;
    if (dg < 0) return;
    const auto& src = I.piece(dg);
    const auto& dst = I.piece(dg + da);
    for (std::size_t u = 0; u < src.free_columns().size(); ++u) {
      for (const auto& [m, x] : a) {
        auto prod = static_cast<std::uint32_t>(ring.product(dg, src.free_columns()[u], da, m));
        auto img = dst.quotient_coords(SparseRow<F>{{prod, field.one()}});
        for (std::size_t t = 0; t < img.size(); ++t) {
          if (field.is_zero(img[t])) continue;
          auto var = static_cast<std::uint32_t>(data[i].offset[k] + u);
          auto& slot = eqs[t][var];
          slot = field.add(slot, field.mul(sign, field.mul(x, img[t])));
        }
      }
    }
  };

  Echelon<F> ech(field, unknowns);
  auto flush = [&](std::vector<std::map<std::uint32_t, typename F::Elem>>& eqs) {
    for (const auto& eq : eqs) {
      SparseRow<F> row;
      for (const auto& [v, x] : eq) {
        if (!field.is_zero(x)) row.emplace_back(v, x);
      }
      if (!row.empty()) ech.insert(row);
    }
  };

  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& I = ideals[i];
    FreeModule F0;
    for (const auto& g : data[i].gens) F0.degrees.push_back(g.degree);
    for (const auto& s : data[i].syz) {
      std::vector<std::map<std::uint32_t, typename F::Elem>> eqs(q(I, s.degree + e));
      auto off = F0.offsets(ring, s.degree);
      for (std::size_t k = 0; k < data[i].gens.size(); ++k) {
        SparseRow<F> a;
        for (const auto& [c, x] : s.coords) {
          if (c >= off[k] && c < off[k + 1]) a.emplace_back(static_cast<std::uint32_t>(c - off[k]), x);
        }
        if (!a.empty()) add_product(eqs, i, k, a, s.degree - data[i].gens[k].degree, field.one());
      }
      flush(eqs);
    }
  }

  for (std::size_t i = 0; i + 1 < ideals.size(); ++i) {
    const auto& I = ideals[i];
    const auto& J = ideals[i + 1];
    for (std::size_t kj = 0; kj < data[i + 1].gens.size(); ++kj) {
      const auto& g = data[i + 1].gens[kj];
      int dt = g.degree + e;
      if (dt < 0 || q(I, dt) == 0) continue;
      // g = sum_k a_k f_k with f_k the generators of I^(i).
      std::vector<std::pair<std::size_t, std::size_t>> cols;  // (k, monomial)
      std::vector<SparseRow<F>> images;
      for (std::size_t k = 0; k < data[i].gens.size(); ++k) {
        int da = g.degree - data[i].gens[k].degree;
        if (da < 0) continue;
        for (std::size_t m = 0; m < ring.dim(da); ++m) {
          cols.emplace_back(k, m);
          images.push_back(shift(ring, data[i].gens[k].coords, data[i].gens[k].degree, da, m));
        }
      }
      Matrix<F> A(field, ring.dim(g.degree), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& [r, x] : images[c]) A.at(r, c) = x;
      }
      auto sol = solve(A, to_dense(field, g.coords, ring.dim(g.degree)));
      if (!sol) throw std::logic_error("generator of the smaller ideal not in the larger one");
      std::vector<std::map<std::uint32_t, typename F::Elem>> eqs(q(I, dt));
      for (std::size_t k = 0; k < data[i].gens.size(); ++k) {
        SparseRow<F> a;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          if (cols[c].first == k && !field.is_zero((*sol)[c])) {
            a.emplace_back(static_cast<std::uint32_t>(cols[c].second), (*sol)[c]);
          }
        }
        if (!a.empty()) add_product(eqs, i, k, a, g.degree - data[i].gens[k].degree, field.one());
      }
      // minus the projection of the image of g in R/J
      const auto& Jq = J.piece(dt);
      const auto& Iq = I.piece(dt);
      for (std::size_t u = 0; u < Jq.free_columns().size(); ++u) {
        auto img = Iq.quotient_coords(SparseRow<F>{{Jq.free_columns()[u], field.one()}});
        for (std::size_t t = 0; t < img.size(); ++t) {
          if (field.is_zero(img[t])) continue;
          auto var = static_cast<std::uint32_t>(data[i + 1].offset[kj] + u);
          auto& slot = eqs[t][var];
          slot = field.sub(slot, img[t]);
        }
      }
      flush(eqs);
    }
  }
  return unknowns - ech.rank();
}

}  // namespace hilbtan::oracle

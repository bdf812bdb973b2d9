#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "hilbtan/errors.hpp"
#include "hilbtan/linalg.hpp"
#include "hilbtan/ring.hpp"

namespace hilbtan {

/// Hilbert function (h(0), ..., h(s)) of a graded quotient.
///
/// For ideals that are not m-primary the profile is cut at the stored cutoff
/// and `truncated` is set.
struct HilbertFunction {
  std::vector<std::int64_t> values;
  bool truncated = false;

  std::int64_t size() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }
  std::int64_t at(int d) const {
    return d >= 0 && static_cast<std::size_t>(d) < values.size() ? values[static_cast<std::size_t>(d)] : 0;
  }
  int length() const { return static_cast<int>(values.size()); }
  std::string to_string() const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

HilbertFunction parse_hilbert_function(const std::string& text);

inline constexpr int kDefaultCutoffCeiling = 32;

/// Homogeneous ideal stored degreewise up to a cutoff.
///
/// Each I_d is a reduced echelon subspace of R_d. When the ideal is
/// m-primary every degree past the socle degree is all of R_d, and pieces
/// beyond the stored cutoff are served as full.
template <typename F>
class HomogeneousIdeal {
 public:
  HomogeneousIdeal() = default;

  /// Ideal generated by `gens`, stored through degree `cutoff`. With
  /// `require_m_primary` the cutoff grows until I_D = R_D or `ceiling`.
  static HomogeneousIdeal from_generators(const F& field, RingPtr ring, std::vector<Form> gens, int cutoff,
                                          bool require_m_primary = false, int ceiling = kDefaultCutoffCeiling) {
    HomogeneousIdeal I;
    I.field_ = field;
    I.ring_ = std::move(ring);
    for (const auto& g : gens) {
      if (g.degree < 0) throw Error(ErrorKind::NonHomogeneousGenerator, "negative degree");
      for (const auto& [idx, c] : g.terms) {
        if (idx >= I.ring_->dim(g.degree)) {
          throw Error(ErrorKind::NonHomogeneousGenerator, "term index outside R_" + std::to_string(g.degree));
        }
      }
    }
    I.generators_ = std::move(gens);
    int max_gen = 0;
    for (const auto& g : I.generators_) max_gen = std::max(max_gen, g.degree);
    if (!require_m_primary && max_gen > cutoff) {
      throw Error(ErrorKind::CutoffTooSmall, "generator of degree " + std::to_string(max_gen) + " above cutoff " +
                                                 std::to_string(cutoff));
    }
    int d = 0;
    for (;; ++d) {
      I.pieces_.push_back(I.build_piece(d));
      bool full = I.pieces_.back().is_full();
      if (require_m_primary) {
        if (full && d >= max_gen && d >= cutoff) break;
        if (full && d >= max_gen) {
          // Past the first full degree every piece is full.
          for (++d; d <= cutoff; ++d) I.pieces_.push_back(Subspace<F>::full(field, I.ring_->dim(d)));
          --d;
          break;
        }
        if (d >= ceiling) {
          throw Error(ErrorKind::CutoffTooSmall,
                      "ideal is not m-primary through degree " + std::to_string(ceiling));
        }
      } else if (d >= cutoff) {
        break;
      }
    }
    I.finalize();
    return I;
  }

  /// Ideal whose degree-d piece is the given subspace, for 0 <= d <= cutoff.
  /// The caller guarantees R_1 * I_d is contained in I_{d+1}.
  static HomogeneousIdeal from_pieces(const F& field, RingPtr ring, std::vector<Subspace<F>> pieces,
                                      std::vector<Form> gens = {}) {
    HomogeneousIdeal I;
    I.field_ = field;
    I.ring_ = std::move(ring);
    I.pieces_ = std::move(pieces);
    I.generators_ = std::move(gens);
    I.finalize();
    return I;
  }

  static HomogeneousIdeal zero(const F& field, RingPtr ring, int cutoff) {
    std::vector<Subspace<F>> pieces;
    for (int d = 0; d <= cutoff; ++d) pieces.emplace_back(field, ring->dim(d));
    return from_pieces(field, std::move(ring), std::move(pieces));
  }

  static HomogeneousIdeal unit(const F& field, RingPtr ring) {
    Form one{0, {{0, mpz_class(1)}}};
    return from_generators(field, std::move(ring), {one}, 0, true);
  }

  /// m^k.
  static HomogeneousIdeal power_of_max(const F& field, RingPtr ring, int k) {
    if (k < 0) throw Error(ErrorKind::OutOfRange, "power of the maximal ideal must be >= 0");
    std::vector<Form> gens;
    for (std::uint32_t i = 0; i < ring->dim(k); ++i) gens.push_back(Form{k, {{i, mpz_class(1)}}});
    std::vector<Subspace<F>> pieces;
    for (int d = 0; d <= k; ++d) {
      pieces.push_back(d < k ? Subspace<F>(field, ring->dim(d)) : Subspace<F>::full(field, ring->dim(d)));
    }
    return from_pieces(field, std::move(ring), std::move(pieces), std::move(gens));
  }

  const F& field() const { return field_; }
  const RingPtr& ring() const { return ring_; }
  int nvars() const { return ring_->nvars(); }
  int cutoff() const { return static_cast<int>(pieces_.size()) - 1; }
  bool is_m_primary() const { return m_primary_; }
  /// Smallest d with I_d != 0, or -1 for the zero ideal (within the cutoff).
  int order() const { return order_; }
  /// Largest d with I_d != R_d; only meaningful for m-primary ideals.
  int socle_degree() const { return socle_; }
  const std::vector<Form>& generators() const { return generators_; }

  const Subspace<F>& piece(int d) const {
    if (d < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
    if (d <= cutoff()) return pieces_[static_cast<std::size_t>(d)];
    if (!m_primary_) {
      throw Error(ErrorKind::CutoffTooSmall, "degree " + std::to_string(d) + " beyond cutoff " +
                                                 std::to_string(cutoff()) + " of a non m-primary ideal");
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->full.find(d);
    if (it == cache_->full.end()) {
      it = cache_->full.emplace(d, std::make_unique<Subspace<F>>(Subspace<F>::full(field_, ring_->dim(d)))).first;
    }
    return *it->second;
  }

  std::size_t dim(int d) const {
    if (d < 0) return 0;
    if (d > cutoff() && m_primary_) return ring_->dim(d);
    return piece(d).dim();
  }
  std::size_t quotient_dim(int d) const { return d < 0 ? 0 : ring_->dim(d) - dim(d); }

  HilbertFunction hilbert_function() const {
    HilbertFunction h;
    int top = m_primary_ ? socle_ : cutoff();
    for (int d = 0; d <= top; ++d) h.values.push_back(static_cast<std::int64_t>(quotient_dim(d)));
    h.truncated = !m_primary_;
    return h;
  }

  std::int64_t colength() const {
    if (!m_primary_) throw Error(ErrorKind::NotMPrimary, "colength of a non m-primary ideal is infinite");
    return hilbert_function().size();
  }

  /// Number of minimal generators in degree d: dim I_d - dim(R_1 I_{d-1}).
  std::size_t min_generator_count(int d) const {
    if (d < 0) return 0;
    if (d == 0) return dim(0);
    return dim(d) - linear_shift_span(d - 1).dim();
  }

  /// Largest degree of a minimal generator.
  int max_generator_degree() const {
    int top = m_primary_ ? socle_ + 1 : cutoff();
    int best = -1;
    for (int d = 0; d <= top; ++d) {
      if (min_generator_count(d) > 0) best = d;
    }
    return best;
  }

  /// R_1 * I_d as a subspace of R_{d+1}.
  Subspace<F> linear_shift_span(int d) const {
    Echelon<F> e(field_, ring_->dim(d + 1));
    if (d >= 0) {
      for (const auto& row : piece(d).basis()) {
        for (int j = 0; j < nvars(); ++j) e.insert(times_var(*ring_, row, d, j));
      }
    }
    return Subspace<F>::from_echelon(e);
  }

  bool contains_element(const Form& f) const {
    if (f.degree > cutoff() && !m_primary_) {
      throw Error(ErrorKind::CutoffTooSmall, "element degree beyond ideal cutoff");
    }
    return piece(f.degree).contains(to_row(field_, f));
  }

  /// Degreewise containment J ⊆ I.
  bool contains(const HomogeneousIdeal& J) const {
    int top = J.is_m_primary() ? std::max(J.socle_degree() + 1, 0) : J.cutoff();
    if (m_primary_) top = std::max(top, socle_ + 1);
    if (top > cutoff() && !m_primary_) {
      throw Error(ErrorKind::CutoffTooSmall, "containment needs degrees beyond the ideal cutoff");
    }
    if (top > J.cutoff() && !J.is_m_primary()) top = J.cutoff();
    for (int d = 0; d <= top; ++d) {
      if (!piece(d).contains(J.piece(d))) return false;
    }
    return true;
  }

  bool equals(const HomogeneousIdeal& J) const { return contains(J) && J.contains(*this); }

  /// Asserts R_1 * I_d ⊆ I_{d+1} for every stored degree below the cutoff.
  bool is_closed_under_multiplication() const {
    for (int d = 0; d < cutoff(); ++d) {
      if (!piece(d + 1).contains(linear_shift_span(d))) return false;
    }
    return true;
  }

 private:
  Subspace<F> build_piece(int d) const {
    Echelon<F> e(field_, ring_->dim(d));
    if (d > 0) {
      for (const auto& row : pieces_[static_cast<std::size_t>(d - 1)].basis()) {
        for (int j = 0; j < nvars(); ++j) e.insert(times_var(*ring_, row, d - 1, j));
      }
    }
    for (const auto& g : generators_) {
      if (g.degree == d) e.insert(to_row(field_, g));
    }
    return Subspace<F>::from_echelon(e);
  }

  void finalize() {
    order_ = -1;
    for (int d = 0; d <= cutoff(); ++d) {
      if (pieces_[static_cast<std::size_t>(d)].dim() > 0) {
        order_ = d;
        break;
      }
    }
    m_primary_ = !pieces_.empty() && pieces_.back().is_full();
    socle_ = -1;
    if (m_primary_) {
      for (int d = cutoff(); d >= 0; --d) {
        if (!pieces_[static_cast<std::size_t>(d)].is_full()) {
          socle_ = d;
          break;
        }
      }
    }
    cache_ = std::make_shared<Cache>();
  }

  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<Subspace<F>>> full;
  };

  F field_{};
  RingPtr ring_;
  std::vector<Subspace<F>> pieces_;
  std::vector<Form> generators_;
  bool m_primary_ = false;
  int order_ = -1;
  int socle_ = -1;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace hilbtan

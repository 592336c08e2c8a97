#pragma once

// The lattice of T-flats (non-empty unions of circuits), its Möbius
// function, and the beta invariant.

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mrt/element_set.hpp"
#include "mrt/matroid.hpp"

namespace mrt {

class TFlatLattice {
  public:
    TFlatLattice() = default;
    explicit TFlatLattice(const Matroid& m);

    /// Sorted by size, then lexicographically.
    [[nodiscard]] const std::vector<ElementSet>& tflats() const { return tflats_; }
    [[nodiscard]] std::size_t size() const { return tflats_.size(); }
    [[nodiscard]] bool empty() const { return tflats_.empty(); }
    [[nodiscard]] bool contains(ElementSet a) const { return index_.count(a) != 0; }
    /// Throws std::invalid_argument when `a` is not a T-flat.
    [[nodiscard]] std::size_t index_of(ElementSet a) const;

    [[nodiscard]] int level(ElementSet a) const { return levels_[index_of(a)]; }
    /// M|A is connected.
    [[nodiscard]] bool connected(ElementSet a) const { return connected_[index_of(a)]; }
    /// T-flats covered by `a` (maximal T-flats strictly inside it).
    [[nodiscard]] std::vector<ElementSet> lower_covers(ElementSet a) const;
    /// Every cover pair as (lower, upper), ordered by upper then lower.
    [[nodiscard]] std::vector<std::pair<ElementSet, ElementSet>> covers() const;
    /// The ground set when the matroid has a T-flat at all.
    [[nodiscard]] ElementSet top() const;

  private:
    std::vector<ElementSet> tflats_;
    std::vector<int> levels_;
    std::vector<bool> connected_;
    std::vector<std::vector<std::size_t>> lower_;
    std::unordered_map<ElementSet, std::size_t> index_;
};

inline TFlatLattice build_tflats(const Matroid& m) { return TFlatLattice(m); }

/// Connected T-flats inside `a`, plus `a` itself (the poset the T-space
/// dimension formula sums over).
std::vector<ElementSet> tspace_poset(const TFlatLattice& l, ElementSet a);

/// mu(A, Z) for every Z in tspace_poset(l, a), on reverse inclusion.
std::vector<std::pair<ElementSet, long long>> mobius_row(const TFlatLattice& l, ElementSet a);

/// mu(A, B); throws std::invalid_argument unless B is in tspace_poset(l, a).
long long mobius(const TFlatLattice& l, ElementSet a, ElementSet b);

/// Crapo's formula over the lattice of flats.  Zero whenever M has a loop.
long long beta_crapo(const Matroid& m);

/// Deletion-contraction on the largest element that is neither a loop nor a
/// coloop.
long long beta_delcon(const Matroid& m);

/// (-1)^{l(A)} sum over tspace_poset of mu(A,B) (l(B)+1).
long long dim_tspace(const Matroid& m, const TFlatLattice& l, ElementSet a);

}  // namespace mrt

#pragma once

// Broken circuit complexes, beta-nbc bases from decreasing chains of
// T-flats, basic cycles and the maps of the deletion/contraction sequence.
//
// Throughout, M is the represented (primal) matroid and N = (M|A)* the
// matroid whose reduced broken circuit complex carries the homology.  The
// distinguished element 1' is min A.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrt/complex.hpp"
#include "mrt/matroid.hpp"
#include "mrt/tflats.hpp"

namespace mrt {

/// A basic-cycle construction that leaves the reduced complex.
class ConventionViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// C \ min C over all circuits, sorted and deduplicated.  A loop gives the
/// empty broken circuit.
std::vector<ElementSet> broken_circuits(const Matroid& m);

/// Sets containing no broken circuit; void when M has a loop.
SimplicialComplex bc_complex(const Matroid& m);
/// The faces of bc_complex avoiding min S.
SimplicialComplex reduced_bc_complex(const Matroid& m);

struct BrylawskiReport {
    bool has_loop = false;
    bool reduced_inside_bc = false;
    bool bc_independent = false;
    bool bc_pure = false;       // of dimension r - 1
    bool cone = false;          // BC is the cone over the reduced complex with apex min S
    bool reduced_pure = false;  // of dimension r - 2
    std::size_t bc_facets = 0;
    std::size_t reduced_facets = 0;
    [[nodiscard]] bool ok() const { return reduced_inside_bc && bc_independent && bc_pure && cone && reduced_pure; }
};

BrylawskiReport brylawski_properties(const Matroid& m);

struct BnbcElement {
    ElementSet b;
    /// A = chain[0] > chain[1] > ... > chain.back(), the last of level 0.
    std::vector<ElementSet> chain;
    /// Strictly decreasing; labels[i] = min(chain[i] \ chain[i+1]).
    std::vector<int> labels;
    /// Number of decreasing chains producing b; the kept chain has the
    /// lexicographically greatest label sequence.
    std::size_t chain_count = 1;
};

/// Beta-nbc bases of (M|A)* from the maximal decreasing chains of the
/// T-flats inside A that contain min A.  Sorted lexicographically by b.
std::vector<BnbcElement> bnbc_via_chains(const Matroid& m, const TFlatLattice& l, ElementSet a);

/// bnbc_via_chains at the whole ground set; empty when S is not a T-flat.
std::vector<BnbcElement> bnbc_of_ground(const Matroid& m);

/// Independent characterization: bases B of (M|A)* with no broken circuit
/// of (M|A)* and no b in B \ {min A} equal to the minimum of its fundamental
/// circuit in M|A with respect to A \ B.
std::vector<ElementSet> bnbc_by_activity(const Matroid& m, ElementSet a);

/// Covers J < I below A containing min A, with their qualification and
/// label, as drawn in the annotated lattice.
struct LabeledCover {
    ElementSet lower, upper;
    bool qualified = false;
    int label = 0;            // min(upper \ lower)
    bool on_decreasing = false;  // lies on some maximal decreasing chain
    bool reachable = false;      // upper is A or reached from A by qualified covers
};
std::vector<LabeledCover> labeled_covers(const Matroid& m, const TFlatLattice& l, ElementSet a);

struct BasicCycle {
    ElementSet b;
    std::vector<ElementSet> blocks;  // {i} u phi^{-1}(i), ascending by i
    Chain chain;                     // coefficient +1 on b \ {min A}
};

/// sigma-bar_B in the reduced complex of (M|A)*.  Throws ConventionViolation
/// when B \ {min A} has an internally active element or a face of the join
/// leaves the complex.
BasicCycle basic_cycle(const Matroid& m, ElementSet a, ElementSet b);

struct CycleBasisReport {
    bool all_cycles = false;      // boundary of each sigma-bar is 0
    bool faces_in_complex = false;
    std::size_t beta = 0;
    std::size_t top_betti = 0;
    std::vector<Int> invariant_factors;  // of the sigma-bar coefficient matrix
    bool torsion_free = false;
    [[nodiscard]] bool unimodular() const;
    [[nodiscard]] bool ok() const { return all_cycles && faces_in_complex && unimodular() && top_betti == beta && torsion_free; }
};

CycleBasisReport cycle_basis_certificate(const Matroid& m, ElementSet a);

/// Coefficients of `z` in the basic cycles of (M|A)*, over the faces of
/// size l(A).  nullopt when z is not an integral combination.
std::optional<std::vector<Int>> cycle_coordinates(const Matroid& m, ElementSet a, const Chain& z);

/// Inclusion of chains of the reduced complex of (M/a)* into that of M*.
Chain epsilon_chain(const Chain& c);
/// F -> F \ a for faces containing a = max S, else 0.
Chain delta_chain(const Chain& c, int a);

struct MapMatrix {
    std::vector<ElementSet> domain;
    std::vector<ElementSet> codomain;
    ZMatrix actual;    // rows codomain, columns domain
    ZMatrix expected;  // closed form
    [[nodiscard]] bool matches() const { return actual == expected; }
};

struct HomologyMapsReport {
    int a = 0;
    int level = 0;
    std::vector<std::string> problems;
    MapMatrix epsilon;  // H(BC(M*\a)) -> H(BC(M*))
    MapMatrix delta;    // H(BC(M*)) -> H(BC(M*/a))
    bool delta_chain_map = false;
    bool exact = false;
    [[nodiscard]] bool ok() const { return problems.empty() && epsilon.matches() && delta.matches() && delta_chain_map && exact; }
};

/// Requires M connected, a = max S neither loop nor coloop and S \ a a
/// T-flat; violations go to `problems`.
HomologyMapsReport homology_maps(const Matroid& m);

struct ChainDecompositionReport {
    int a = 0;
    bool complement_is_tflat = false;
    std::size_t chains_total = 0, chains_through = 0, chains_other = 0;
    bool deletion_matches = false;
    bool contraction_matches = false;
    std::vector<std::string> problems;
    [[nodiscard]] bool ok() const { return problems.empty() && deletion_matches && contraction_matches; }
};

ChainDecompositionReport chain_decomposition_check(const Matroid& m);

}  // namespace mrt

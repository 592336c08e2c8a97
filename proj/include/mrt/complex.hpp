#pragma once

// Finite abstract simplicial complexes, integral chains and reduced
// homology.  Faces are oriented by ascending vertex order.

#include <cstddef>
#include <map>
#include <vector>

#include "mrt/element_set.hpp"
#include "mrt/exactq.hpp"

namespace mrt {

class SimplicialComplex {
  public:
    /// The void complex: no faces at all, not even the empty one.
    static SimplicialComplex void_complex(ElementSet vertices);
    /// Downward closure of `faces`; the empty face is always present.
    static SimplicialComplex from_faces(ElementSet vertices, const std::vector<ElementSet>& faces);

    [[nodiscard]] ElementSet vertices() const { return vertices_; }
    [[nodiscard]] bool is_void() const { return void_; }
    /// Inclusion-maximal faces, sorted by size then lexicographically.
    [[nodiscard]] const std::vector<ElementSet>& facets() const { return facets_; }
    /// Largest face size minus one; -1 for {empty}, -2 when void.
    [[nodiscard]] int dimension() const;
    [[nodiscard]] bool is_pure() const;
    [[nodiscard]] bool contains(ElementSet face) const;
    /// faces(k) lists every face with k vertices, lexicographically.
    [[nodiscard]] std::vector<ElementSet> faces(int k) const;
    [[nodiscard]] std::size_t face_count() const;

  private:
    ElementSet vertices_;
    bool void_ = true;
    std::vector<ElementSet> facets_;
};

struct LexLess {
    bool operator()(ElementSet a, ElementSet b) const { return ElementSet::lex_less(a, b); }
};

/// Integral combination of oriented faces; zero coefficients are dropped.
using Chain = std::map<ElementSet, Int, LexLess>;

void add_to(Chain& c, ElementSet face, const Int& coeff);

/// Reduced boundary: a vertex maps to the empty face.
Chain boundary(const Chain& c);

/// (-1)^i for the i-th vertex (0-based, ascending) of `face`.
int boundary_sign(ElementSet face, int vertex);

/// Boundary matrix from the faces with k vertices to those with k-1;
/// rows and columns follow the given face lists.
ZMatrix boundary_matrix(const std::vector<ElementSet>& lower, const std::vector<ElementSet>& upper);

/// Coefficient column of `c` over `faces`; throws if c has other support.
std::vector<Int> chain_vector(const Chain& c, const std::vector<ElementSet>& faces);

struct HomologyGroup {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<Int> torsion;  // invariant factors greater than one
};

/// Reduced homology over the integers, degrees -1 .. dimension().
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k);

}  // namespace mrt

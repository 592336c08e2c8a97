#pragma once

// Ordered matroids given by a rank oracle.
//
// Element labels are never renumbered: a minor or dual keeps the labels of
// the matroid it came from, and its ground set is a subset of those labels.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mrt/element_set.hpp"
#include "mrt/exactq.hpp"

namespace mrt {

/// A matrix whose j-th column represents the element labels[j].
struct Representation {
    QMatrix matrix;
    std::vector<int> labels;

    /// Labels 1..ncols in column order.
    static Representation from_matrix(QMatrix m);

    [[nodiscard]] ElementSet ground() const;
    [[nodiscard]] std::size_t column_index(int label) const;
    [[nodiscard]] QVector column(int label) const;
    [[nodiscard]] std::vector<QVector> columns(ElementSet s) const;
    [[nodiscard]] Representation restrict_to(ElementSet s) const;
};

enum class Provenance { representation, uniform, dual, restriction, contraction };

std::string to_string(Provenance p);

class Matroid {
  public:
    static Matroid from_matrix(const QMatrix& m);
    static Matroid from_representation(const Representation& rep);
    /// U_{r,n} on {1..n}; throws std::invalid_argument unless 0 <= r <= n.
    static Matroid uniform(int r, int n);

    [[nodiscard]] ElementSet ground() const;
    [[nodiscard]] int size() const { return ground().size(); }
    /// Rank of a subset of the ground set (memoized).
    [[nodiscard]] int rank(ElementSet s) const;
    [[nodiscard]] int rank() const { return rank(ground()); }
    [[nodiscard]] Provenance provenance() const;
    /// Present only when provenance() == representation.
    [[nodiscard]] const Representation* representation() const;

    [[nodiscard]] Matroid dual() const;
    /// M|A, ground A.
    [[nodiscard]] Matroid restrict(ElementSet a) const;
    /// M/A, ground S \ A, rank X -> r(X u A) - r(A).
    [[nodiscard]] Matroid contract(ElementSet a) const;
    [[nodiscard]] Matroid delete_element(int a) const;
    [[nodiscard]] Matroid contract_element(int a) const;

    /// All circuits, sorted by size then lexicographically (cached).
    [[nodiscard]] const std::vector<ElementSet>& circuits() const;

  private:
    struct State;
    explicit Matroid(std::shared_ptr<State> s) : state_(std::move(s)) {}
    std::shared_ptr<State> state_;
};

inline const std::vector<ElementSet>& circuits(const Matroid& m) { return m.circuits(); }

/// |A| - r(A) - 1
int level(const Matroid& m, ElementSet a);

bool is_independent(const Matroid& m, ElementSet a);
bool is_basis(const Matroid& m, ElementSet a);
ElementSet closure(const Matroid& m, ElementSet a);
ElementSet loops(const Matroid& m);
ElementSet coloops(const Matroid& m);
bool is_connected(const Matroid& m);

/// Scans A from its largest element down and keeps an element whenever it
/// raises the rank.
ElementSet lex_greatest_basis(const Matroid& m, ElementSet a);

/// The unique circuit inside basis u {x} for x outside the basis.
ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int x);

/// All flats, sorted by rank then lexicographically.
std::vector<ElementSet> flats(const Matroid& m);

/// True when the two matroids share a ground set and agree on every rank.
bool same_rank_function(const Matroid& a, const Matroid& b);

}  // namespace mrt

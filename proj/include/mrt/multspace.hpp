#pragma once

// Multiplicity spaces: the polynomials x_B in Sym(V), the maps nu and pi of
// the deletion/contraction sequence, and the dual commutative diagram.
//
// Polynomials are written in a fixed basis of V = column span of phi.  A
// monomial with exponent vector (m_1..m_d) stands for prod_k b_k^{m_k} where
// b_k is the k-th coordinate basis vector.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrt/bcc.hpp"
#include "mrt/exactq.hpp"
#include "mrt/matroid.hpp"
#include "mrt/tflats.hpp"

namespace mrt {

/// A cover whose linear form is missing or not unique.
class MultiplicityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Coordinates on V.  Pivot coordinates expand vectors in the columns of a
/// basis of phi; ambient coordinates are the identity.
class VCoords {
  public:
    /// Throws std::invalid_argument unless `basis` indexes a basis of the
    /// column space.
    static VCoords pivot(const Representation& rep, ElementSet basis);
    /// Pivot coordinates on lex_greatest_basis(M, S).
    static VCoords pivot(const Representation& rep);
    static VCoords ambient(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] bool is_pivot() const { return pivot_; }
    [[nodiscard]] ElementSet pivot_basis() const { return basis_; }
    /// "v4", "v5" for pivot coordinates, "t1", "t2" otherwise.
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    /// Throws std::invalid_argument when v is outside V.
    [[nodiscard]] QVector coords(const QVector& v) const;

  private:
    bool pivot_ = false;
    std::size_t dim_ = 0;
    ElementSet basis_;
    std::vector<QVector> basis_columns_;
    std::vector<std::string> names_;
};

/// Homogeneous or not, a polynomial in dim() commuting variables.
class SymPoly {
  public:
    using Exponents = std::vector<int>;
    /// Descending lexicographic order on exponent vectors.
    struct Order {
        bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
    };
    using Terms = std::map<Exponents, Rat, Order>;

    explicit SymPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static SymPoly constant(std::size_t nvars, const Rat& c);
    static SymPoly linear(const QVector& coeffs);

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial; throws if not homogeneous.
    [[nodiscard]] int degree() const;

    [[nodiscard]] SymPoly times_linear(const QVector& form) const;
    /// Algebra map sending variable k to the linear form images[k].
    [[nodiscard]] SymPoly substitute(const std::vector<QVector>& images, std::size_t new_nvars) const;
    [[nodiscard]] std::string str(const std::vector<std::string>& names) const;

    void add_term(const Exponents& e, const Rat& c);

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const Rat& c, const SymPoly& p);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  private:
    std::size_t nvars_;
    Terms terms_;
};

/// phi(u) for the cover j_prev < j_next, in the coordinates `vc`, where
/// u = e_p + sum_{j in D, j < p} c_j e_j, D = j_next \ j_prev, p = max D and
/// phi(u) lies in V_{j_prev}.
QVector chain_linear_form(const Representation& rep, const VCoords& vc, ElementSet j_prev, ElementSet j_next);

/// Product of the chain linear forms along B's chain, read upward.
SymPoly x_b(const Representation& rep, const VCoords& vc, const BnbcElement& b);

struct TBasisElement {
    BnbcElement index;
    SymPoly xb;
    ElementSet e_label;  // A, for e_A
    ElementSet v_label;  // A \ B, for v_{A \ B}
};

/// Coefficient matrix of polynomials over the union of their monomials.
struct CoefficientMatrix {
    std::vector<SymPoly::Exponents> monomials;  // rows, descending lex
    QMatrix matrix;                              // columns follow the input polynomials
};
CoefficientMatrix coefficient_matrix(const std::vector<SymPoly>& polys);

struct MultiplicityBasis {
    std::vector<TBasisElement> elements;
    std::size_t rank_q = 0;  // rank over the rationals
    std::size_t rank_z = 0;  // rank after clearing denominators, by Smith form
    bool wedge_labels_ok = false;
    [[nodiscard]] bool independent() const { return rank_q == elements.size() && rank_z == elements.size(); }
};

MultiplicityBasis multiplicity_basis(const Representation& rep, const VCoords& vc, ElementSet a);

struct UniformBasisReport {
    int r = 0, n = 0;
    bool generic = false;
    std::size_t count = 0;      // number of products
    std::size_t sym_dim = 0;    // dim Sym_{n-r-1} V
    std::size_t rank = 0;
    [[nodiscard]] bool ok() const { return generic && count == sym_dim && rank == count; }
};

/// Products of phi(e_b) over (n-r-1)-subsets of {3..n} against
/// Sym_{n-r-1}(V).  Not generic when some r columns are dependent.
UniformBasisReport uniform_symmetric_basis_check(int r, int n, const QMatrix& phi);

/// Quotient V -> V / <phi(e_a)> in coordinates: drops the coordinate k* of
/// largest index with alpha_{k*} != 0, where alpha = vc.coords(phi(e_a)).
struct Quotient {
    std::size_t k_star = 0;
    QVector alpha;
    std::vector<QVector> images;  // image of each coordinate basis vector
    [[nodiscard]] QVector apply(const QVector& t) const;
};
Quotient quotient_by(const Representation& rep, const VCoords& vc, int a);

/// The representation of M/a: columns other than a, in quotient coordinates.
Representation contract_representation(const Representation& rep, const VCoords& vc, int a);

struct SquareCheck {
    std::vector<ElementSet> domain;
    std::vector<ElementSet> codomain;
    QMatrix multiplicity;  // map on the x_B bases
    QMatrix homology;      // transpose of the homology map, with its sign
    [[nodiscard]] bool commutes() const { return multiplicity == homology; }
};

struct DiagramReport {
    int a = 0;
    int level = 0;
    std::vector<std::string> problems;

    std::vector<ElementSet> full_index;         // beta-nbc of M*
    std::vector<ElementSet> deletion_index;     // beta-nbc of (M\a)*
    std::vector<ElementSet> contraction_index;  // beta-nbc of (M/a)*

    bool nu_formula = false;      // nu(x_B) = x_{B u a}
    bool pi_zero_pattern = false; // pi(x_B) = 0 iff a in B
    bool pi_formula = false;      // pi(x_B) = x-bar_B when a not in B
    std::vector<std::pair<ElementSet, Rat>> pi_scale;  // pi(x_B) = c x-bar_B
    bool pi_after_nu_zero = false;
    bool nu_injective = false;
    bool pi_surjective = false;
    bool exact = false;

    SquareCheck nu_square;  // nu against delta^T
    SquareCheck pi_square;  // (-1)^l pi against ((-1)^l epsilon)^T

    [[nodiscard]] bool sequence_ok() const {
        return problems.empty() && nu_formula && pi_zero_pattern && pi_after_nu_zero && nu_injective && pi_surjective &&
               exact;
    }
    [[nodiscard]] bool diagram_commutes() const { return problems.empty() && nu_square.commutes() && pi_square.commutes(); }
};

/// a = max S.  Needs M connected, a neither loop nor coloop, S \ a a
/// T-flat; violations are listed in `problems`.  `pivot` overrides the
/// default pivot basis.
DiagramReport diagram_check(const Representation& rep, std::optional<ElementSet> pivot = std::nullopt);

}  // namespace mrt

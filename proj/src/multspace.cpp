#include "mrt/multspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mrt {

VCoords VCoords::pivot(const Representation& rep, ElementSet basis) {
    VCoords vc;
    vc.pivot_ = true;
    vc.basis_ = basis;
    vc.basis_columns_ = rep.columns(basis);
    vc.dim_ = vc.basis_columns_.size();
    if (rank(rep.matrix) != vc.dim_ || rank(rep.restrict_to(basis).matrix) != vc.dim_)
        throw std::invalid_argument("VCoords: " + basis.str() + " is not a basis of the column space");
    for (int e : basis.elements()) vc.names_.push_back("v" + std::to_string(e));
    return vc;
}

VCoords VCoords::pivot(const Representation& rep) {
    const Matroid m = Matroid::from_representation(rep);
    return pivot(rep, lex_greatest_basis(m, m.ground()));
}

VCoords VCoords::ambient(std::size_t dim) {
    VCoords vc;
    vc.dim_ = dim;
    for (std::size_t k = 1; k <= dim; ++k) vc.names_.push_back("t" + std::to_string(k));
    return vc;
}

QVector VCoords::coords(const QVector& v) const {
    if (!pivot_) {
        if (v.size() != dim_) throw std::invalid_argument("VCoords: vector has the wrong length");
        return v;
    }
    auto c = in_span(v, basis_columns_);
    if (!c) throw std::invalid_argument("VCoords: vector outside the column space");
    return *c;
}

SymPoly SymPoly::constant(std::size_t nvars, const Rat& c) {
    SymPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

SymPoly SymPoly::linear(const QVector& coeffs) {
    SymPoly p(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Exponents e(coeffs.size(), 0);
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

void SymPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars_) throw std::invalid_argument("SymPoly: exponent vector has the wrong length");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (d >= 0 && s != d) throw std::logic_error("SymPoly: not homogeneous");
        d = s;
    }
    return d;
}

SymPoly SymPoly::times_linear(const QVector& form) const { return *this * linear(form); }

SymPoly SymPoly::substitute(const std::vector<QVector>& images, std::size_t new_nvars) const {
    if (images.size() != nvars_) throw std::invalid_argument("SymPoly::substitute: one image per variable");
    SymPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
        SymPoly term = constant(new_nvars, c);
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int t = 0; t < e[k]; ++t) term = term.times_linear(images[k]);
        out = out + term;
    }
    return out;
}

std::string SymPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            os << mag;
        else if (mag == 1)
            os << mono;
        else
            os << mag << "*" << mono;
        first = false;
    }
    return os.str();
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("SymPoly: variable count mismatch");
    SymPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + Rat(-1) * b; }

SymPoly operator*(const Rat& c, const SymPoly& p) {
    SymPoly out(p.nvars_);
    for (const auto& [e, x] : p.terms_) out.add_term(e, c * x);
    return out;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("SymPoly: variable count mismatch");
    SymPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            SymPoly::Exponents e(a.nvars_);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

QVector chain_linear_form(const Representation& rep, const VCoords& vc, ElementSet j_prev, ElementSet j_next) {
    if (!j_prev.proper_subset_of(j_next))
        throw std::invalid_argument("chain_linear_form: " + j_prev.str() + " is not inside " + j_next.str());
    const ElementSet d = j_next - j_prev;
    const int p = d.max();
    const Matroid m = Matroid::from_representation(rep.restrict_to(j_next));
    const auto prev_basis = rep.columns(lex_greatest_basis(m, j_prev));

    std::vector<QVector> unknowns;
    for (int j : d.without(p).elements()) unknowns.push_back(rep.column(j));
    for (const QVector& b : prev_basis) {
        QVector neg = b;
        for (auto& x : neg) x = -x;
        unknowns.push_back(std::move(neg));
    }
    QVector target = rep.column(p);
    for (auto& x : target) x = -x;

    const std::string where = "cover " + j_prev.str() + " < " + j_next.str();
    if (!unknowns.empty() && rank(QMatrix::from_columns(unknowns, target.size())) != unknowns.size())
        throw MultiplicityError("chain_linear_form: the linear form for " + where + " is not unique");
    const auto sol = in_span(target, unknowns);
    if (!sol) throw MultiplicityError("chain_linear_form: no linear form for " + where);

    QVector image = rep.column(p);
    std::size_t t = 0;
    for (int j : d.without(p).elements()) {
        const QVector col = rep.column(j);
        for (std::size_t i = 0; i < image.size(); ++i) image[i] += (*sol)[t] * col[i];
        ++t;
    }
    return vc.coords(image);
}

SymPoly x_b(const Representation& rep, const VCoords& vc, const BnbcElement& b) {
    SymPoly p = SymPoly::constant(vc.dim(), 1);
    for (std::size_t i = b.chain.size(); i-- > 1;)
        p = p.times_linear(chain_linear_form(rep, vc, b.chain[i], b.chain[i - 1]));
    return p;
}

CoefficientMatrix coefficient_matrix(const std::vector<SymPoly>& polys) {
    CoefficientMatrix out;
    std::set<SymPoly::Exponents, SymPoly::Order> monos;
    for (const SymPoly& p : polys)
        for (const auto& [e, c] : p.terms()) monos.insert(e);
    out.monomials.assign(monos.begin(), monos.end());
    out.matrix = QMatrix(out.monomials.size(), polys.size());
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (std::size_t i = 0; i < out.monomials.size(); ++i) {
            auto it = polys[j].terms().find(out.monomials[i]);
            if (it != polys[j].terms().end()) out.matrix(i, j) = it->second;
        }
    return out;
}

MultiplicityBasis multiplicity_basis(const Representation& rep, const VCoords& vc, ElementSet a) {
    MultiplicityBasis out;
    const Matroid m = Matroid::from_representation(rep);
    const TFlatLattice l(m);
    (void)l.index_of(a);
    std::vector<SymPoly> polys;
    out.wedge_labels_ok = true;
    for (const BnbcElement& e : bnbc_via_chains(m, l, a)) {
        TBasisElement t{e, x_b(rep, vc, e), a, a - e.b};
        if (!is_basis(m.restrict(a), t.v_label)) out.wedge_labels_ok = false;
        polys.push_back(t.xb);
        out.elements.push_back(std::move(t));
    }
    const CoefficientMatrix cm = coefficient_matrix(polys);
    out.rank_q = rank(cm.matrix);
    out.rank_z = smith_normal_form(clear_denominators(cm.matrix)).rank;
    return out;
}

UniformBasisReport uniform_symmetric_basis_check(int r, int n, const QMatrix& phi) {
    UniformBasisReport rep;
    rep.r = r;
    rep.n = n;
    if (phi.cols() != static_cast<std::size_t>(n) || r < 1 || r >= n) return rep;
    const Representation rp = Representation::from_matrix(phi);
    const Matroid m = Matroid::from_representation(rp);
    rep.generic = m.rank() == r;
    for_each_k_subset(m.ground(), r, [&](ElementSet x) {
        if (m.rank(x) != r) rep.generic = false;
    });
    if (!rep.generic) return rep;

    const VCoords vc = VCoords::pivot(rp);
    const int k = n - r - 1;
    std::vector<SymPoly> polys;
    const ElementSet pool = ElementSet::range(n) - ElementSet{1, 2};
    for_each_k_subset(pool, k, [&](ElementSet b) {
        SymPoly p = SymPoly::constant(vc.dim(), 1);
        for (int e : b.elements()) p = p.times_linear(vc.coords(rp.column(e)));
        polys.push_back(std::move(p));
    });
    rep.count = polys.size();
    // dim Sym_k of an r-dimensional space
    Int dim;
    mpz_bin_uiui(dim.get_mpz_t(), static_cast<unsigned long>(r + k - 1), static_cast<unsigned long>(k));
    rep.sym_dim = dim.get_ui();
    rep.rank = rank(coefficient_matrix(polys).matrix);
    return rep;
}

QVector Quotient::apply(const QVector& t) const {
    QVector out;
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != k_star) out.push_back(t[k] - t[k_star] * alpha[k] / alpha[k_star]);
    return out;
}

Quotient quotient_by(const Representation& rep, const VCoords& vc, int a) {
    Quotient q;
    q.alpha = vc.coords(rep.column(a));
    bool found = false;
    for (std::size_t k = 0; k < q.alpha.size(); ++k)
        if (q.alpha[k] != 0) {
            q.k_star = k;
            found = true;
        }
    if (!found) throw std::invalid_argument("quotient_by: element " + std::to_string(a) + " is a loop");
    for (std::size_t k = 0; k < vc.dim(); ++k) {
        QVector unit(vc.dim(), Rat(0));
        unit[k] = 1;
        q.images.push_back(q.apply(unit));
    }
    return q;
}

Representation contract_representation(const Representation& rep, const VCoords& vc, int a) {
    const Quotient q = quotient_by(rep, vc, a);
    Representation out;
    std::vector<QVector> cols;
    for (int e : rep.ground().without(a).elements()) {
        out.labels.push_back(e);
        cols.push_back(q.apply(vc.coords(rep.column(e))));
    }
    out.matrix = QMatrix::from_columns(cols, vc.dim() - 1);
    return out;
}

namespace {

std::vector<ElementSet> index_of_elements(const std::vector<BnbcElement>& v) {
    std::vector<ElementSet> out;
    for (const auto& e : v) out.push_back(e.b);
    return out;
}

// Coordinates of p in the span of `basis`, or nullopt.
std::optional<QVector> express(const SymPoly& p, const std::vector<SymPoly>& basis) {
    std::vector<SymPoly> all = basis;
    all.push_back(p);
    const CoefficientMatrix cm = coefficient_matrix(all);
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < basis.size(); ++j) cols.push_back(cm.matrix.column(j));
    return in_span(cm.matrix.column(basis.size()), cols);
}

QMatrix rational(const ZMatrix& z) { return to_rational(z); }

}  // namespace

DiagramReport diagram_check(const Representation& rep, std::optional<ElementSet> pivot) {
    DiagramReport out;
    const Matroid m = Matroid::from_representation(rep);
    const ElementSet s = m.ground();
    if (s.size() < 2) {
        out.problems.push_back("ground set needs at least two elements");
        return out;
    }
    const int a = s.max();
    out.a = a;
    out.level = level(m, s);
    const ElementSet rest = s.without(a);
    if (!is_connected(m)) out.problems.push_back("matroid is disconnected");
    if (loops(m).contains(a)) out.problems.push_back(std::to_string(a) + " is a loop");
    if (coloops(m).contains(a)) out.problems.push_back(std::to_string(a) + " is a coloop");
    if (!TFlatLattice(m).contains(rest)) out.problems.push_back(rest.str() + " is not a T-flat");
    if (!out.problems.empty()) return out;

    const VCoords vc = pivot ? VCoords::pivot(rep, *pivot) : VCoords::pivot(rep);
    const Representation rep_del = rep.restrict_to(rest);
    const Representation rep_con = contract_representation(rep, vc, a);
    const VCoords vc_con = VCoords::ambient(vc.dim() - 1);
    const Matroid mcon = Matroid::from_representation(rep_con);
    if (!same_rank_function(mcon, m.contract_element(a)))
        out.problems.push_back("contracted representation does not represent M/a");

    const auto full = bnbc_of_ground(m);
    const auto del = bnbc_of_ground(Matroid::from_representation(rep_del));
    const auto con = bnbc_of_ground(mcon);
    out.full_index = index_of_elements(full);
    out.deletion_index = index_of_elements(del);
    out.contraction_index = index_of_elements(con);

    std::vector<SymPoly> x_full, x_del, x_con;
    try {
        for (const auto& e : full) x_full.push_back(x_b(rep, vc, e));
        for (const auto& e : del) x_del.push_back(x_b(rep_del, vc, e));
        for (const auto& e : con) x_con.push_back(x_b(rep_con, vc_con, e));
    } catch (const MultiplicityError& err) {
        out.problems.push_back(err.what());
        return out;
    }

    // nu: multiplication by phi(e_a)
    const QVector va = vc.coords(rep.column(a));
    QMatrix nu(full.size(), del.size());
    out.nu_formula = true;
    std::vector<SymPoly> nu_images;
    for (std::size_t j = 0; j < del.size(); ++j) {
        const SymPoly img = x_del[j].times_linear(va);
        nu_images.push_back(img);
        const auto target = std::find(out.full_index.begin(), out.full_index.end(), del[j].b.with(a));
        if (target == out.full_index.end() || x_full[static_cast<std::size_t>(target - out.full_index.begin())] != img)
            out.nu_formula = false;
        const auto c = express(img, x_full);
        if (!c) {
            out.problems.push_back("nu image of " + del[j].b.str() + " is outside the span of the x_B");
            continue;
        }
        for (std::size_t i = 0; i < full.size(); ++i) nu(i, j) = (*c)[i];
    }

    // pi: the quotient by phi(e_a)
    const Quotient q = quotient_by(rep, vc, a);
    QMatrix pi(con.size(), full.size());
    out.pi_zero_pattern = true;
    out.pi_formula = true;
    for (std::size_t j = 0; j < full.size(); ++j) {
        const SymPoly img = x_full[j].substitute(q.images, vc.dim() - 1);
        const bool has_a = full[j].b.contains(a);
        if (img.is_zero() != has_a) out.pi_zero_pattern = false;
        const auto c = express(img, x_con);
        if (!c) {
            out.problems.push_back("pi image of " + full[j].b.str() + " is outside the span of the contraction basis");
            continue;
        }
        for (std::size_t i = 0; i < con.size(); ++i) pi(i, j) = (*c)[i];
        if (!has_a) {
            const auto target = std::find(out.contraction_index.begin(), out.contraction_index.end(), full[j].b);
            bool proportional = target != out.contraction_index.end();
            Rat scale = 0;
            if (proportional) {
                const std::size_t ti = static_cast<std::size_t>(target - out.contraction_index.begin());
                for (std::size_t i = 0; i < con.size(); ++i)
                    if (i != ti && (*c)[i] != 0) proportional = false;
                scale = (*c)[ti];
            }
            if (proportional) out.pi_scale.emplace_back(full[j].b, scale);
            if (!proportional || scale != 1) out.pi_formula = false;
        }
    }

    out.pi_after_nu_zero = true;
    for (const SymPoly& img : nu_images)
        if (!img.substitute(q.images, vc.dim() - 1).is_zero()) out.pi_after_nu_zero = false;
    out.nu_injective = rank(nu) == del.size();
    out.pi_surjective = rank(pi) == con.size();
    out.exact = out.pi_after_nu_zero && out.nu_injective && out.pi_surjective &&
                full.size() == del.size() + con.size() && (pi * nu).is_zero();

    // the homology side, transposed
    const HomologyMapsReport h = homology_maps(m);
    for (const std::string& p : h.problems) out.problems.push_back("homology: " + p);
    if (h.delta.codomain != out.deletion_index || h.delta.domain != out.full_index ||
        h.epsilon.domain != out.contraction_index || h.epsilon.codomain != out.full_index)
        out.problems.push_back("homology and multiplicity index sets differ");
    if (!out.problems.empty()) return out;

    const Rat sign = out.level % 2 == 0 ? 1 : -1;
    out.nu_square.domain = out.deletion_index;
    out.nu_square.codomain = out.full_index;
    out.nu_square.multiplicity = nu;
    out.nu_square.homology = rational(h.delta.actual).transpose();

    out.pi_square.domain = out.full_index;
    out.pi_square.codomain = out.contraction_index;
    out.pi_square.multiplicity = pi;
    QMatrix eps_t = rational(h.epsilon.actual).transpose();
    for (std::size_t i = 0; i < pi.rows(); ++i)
        for (std::size_t j = 0; j < pi.cols(); ++j) {
            out.pi_square.multiplicity(i, j) *= sign;
            eps_t(i, j) *= sign;
        }
    out.pi_square.homology = eps_t;
    return out;
}

}  // namespace mrt

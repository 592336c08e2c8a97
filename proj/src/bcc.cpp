#include "mrt/bcc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace mrt {

std::vector<ElementSet> broken_circuits(const Matroid& m) {
    std::vector<ElementSet> out;
    for (ElementSet c : m.circuits()) out.push_back(c.without(c.min()));
    std::sort(out.begin(), out.end(), ElementSet::SizeLexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool avoids(ElementSet x, const std::vector<ElementSet>& bcs) {
    return std::none_of(bcs.begin(), bcs.end(), [&](ElementSet bc) { return bc.subset_of(x); });
}

SimplicialComplex nbc_complex(const Matroid& m, ElementSet vertices) {
    const auto bcs = broken_circuits(m);
    if (!avoids(ElementSet{}, bcs)) return SimplicialComplex::void_complex(vertices);
    std::vector<ElementSet> faces;
    for_each_subset(vertices, [&](ElementSet x) {
        if (avoids(x, bcs)) faces.push_back(x);
    });
    return SimplicialComplex::from_faces(vertices, faces);
}

}  // namespace

SimplicialComplex bc_complex(const Matroid& m) { return nbc_complex(m, m.ground()); }

SimplicialComplex reduced_bc_complex(const Matroid& m) {
    const ElementSet g = m.ground();
    return nbc_complex(m, g.empty() ? g : g.without(g.min()));
}

BrylawskiReport brylawski_properties(const Matroid& m) {
    BrylawskiReport rep;
    const SimplicialComplex bc = bc_complex(m);
    const SimplicialComplex red = reduced_bc_complex(m);
    rep.has_loop = !loops(m).empty();
    rep.bc_facets = bc.facets().size();
    rep.reduced_facets = red.facets().size();
    if (rep.has_loop || m.ground().empty()) {
        rep.reduced_inside_bc = rep.bc_independent = rep.cone = true;
        rep.bc_pure = rep.reduced_pure = bc.is_void() || m.ground().empty();
        return rep;
    }
    const int r = m.rank();
    const int one = m.ground().min();
    rep.reduced_inside_bc =
        std::all_of(red.facets().begin(), red.facets().end(), [&](ElementSet f) { return bc.contains(f); });
    rep.bc_independent =
        std::all_of(bc.facets().begin(), bc.facets().end(), [&](ElementSet f) { return is_independent(m, f); });
    rep.bc_pure = bc.is_pure() && bc.dimension() == r - 1;
    rep.reduced_pure = red.is_pure() && red.dimension() == r - 2;
    bool cone = bc.facets().size() == red.facets().size();
    for (ElementSet f : bc.facets()) {
        if (!f.contains(one) || !red.contains(f.without(one))) cone = false;
    }
    for (ElementSet f : red.facets())
        if (!bc.contains(f.with(one))) cone = false;
    rep.cone = cone;
    return rep;
}

namespace {

struct RawChain {
    std::vector<ElementSet> chain;
    std::vector<int> labels;
};

// The T-flats below A containing `one`, with covers taken inside that poset.
struct ChainSearch {
    const Matroid& m;
    ElementSet a;
    int one;
    std::vector<ElementSet> sub;  // sorted by size then lex
    std::unordered_map<ElementSet, std::vector<ElementSet>> cover_cache;
    std::unordered_map<ElementSet, ElementSet> lgb_cache;

    ChainSearch(const Matroid& mm, const TFlatLattice& l, ElementSet aa) : m(mm), a(aa), one(aa.min()) {
        for (ElementSet t : l.tflats())
            if (t.subset_of(a) && t.contains(one)) sub.push_back(t);
    }

    const std::vector<ElementSet>& covers(ElementSet x) {
        auto it = cover_cache.find(x);
        if (it != cover_cache.end()) return it->second;
        std::vector<ElementSet> below;
        for (ElementSet t : sub)
            if (t.proper_subset_of(x)) below.push_back(t);
        std::vector<ElementSet> out;
        for (std::size_t k = 0; k < below.size(); ++k) {
            bool maximal = true;
            for (std::size_t q = k + 1; q < below.size() && maximal; ++q)
                if (below[k].proper_subset_of(below[q])) maximal = false;
            if (maximal) out.push_back(below[k]);
        }
        return cover_cache.emplace(x, std::move(out)).first->second;
    }

    ElementSet qualifier(ElementSet x) {
        auto it = lgb_cache.find(x);
        if (it != lgb_cache.end()) return it->second;
        return lgb_cache.emplace(x, lex_greatest_basis(m, x.without(one))).first->second;
    }

    bool qualified(ElementSet lower, ElementSet upper) { return (upper - lower).subset_of(qualifier(upper)); }

    void dfs(RawChain& cur, std::vector<RawChain>& out) {
        const ElementSet x = cur.chain.back();
        if (level(m, x) == 0) {
            out.push_back(cur);
            return;
        }
        for (ElementSet y : covers(x)) {
            if (!qualified(y, x)) continue;
            const int lab = (x - y).min();
            if (!cur.labels.empty() && lab >= cur.labels.back()) continue;
            cur.chain.push_back(y);
            cur.labels.push_back(lab);
            dfs(cur, out);
            cur.chain.pop_back();
            cur.labels.pop_back();
        }
    }

    std::vector<RawChain> all_chains() {
        std::vector<RawChain> out;
        RawChain start{{a}, {}};
        dfs(start, out);
        return out;
    }
};

std::vector<RawChain> all_decreasing_chains(const Matroid& m, const TFlatLattice& l, ElementSet a) {
    (void)l.index_of(a);
    ChainSearch search(m, l, a);
    return search.all_chains();
}

ElementSet b_of(const RawChain& c, int one) {
    ElementSet b{one};
    for (int x : c.labels) b.insert(x);
    return b;
}

}  // namespace

std::vector<BnbcElement> bnbc_via_chains(const Matroid& m, const TFlatLattice& l, ElementSet a) {
    const auto chains = all_decreasing_chains(m, l, a);
    std::map<ElementSet, BnbcElement, LexLess> by_b;
    for (const RawChain& c : chains) {
        const ElementSet b = b_of(c, a.min());
        auto [it, fresh] = by_b.emplace(b, BnbcElement{b, c.chain, c.labels, 1});
        if (!fresh) {
            ++it->second.chain_count;
            if (std::lexicographical_compare(it->second.labels.begin(), it->second.labels.end(), c.labels.begin(),
                                             c.labels.end())) {
                it->second.chain = c.chain;
                it->second.labels = c.labels;
            }
        }
    }
    std::vector<BnbcElement> out;
    for (auto& [b, e] : by_b) out.push_back(std::move(e));
    return out;
}

std::vector<BnbcElement> bnbc_of_ground(const Matroid& m) {
    const TFlatLattice l(m);
    if (m.ground().empty() || !l.contains(m.ground())) return {};
    return bnbc_via_chains(m, l, m.ground());
}

std::vector<ElementSet> bnbc_by_activity(const Matroid& m, ElementSet a) {
    const Matroid ma = m.restrict(a);
    const Matroid n = ma.dual();
    const auto bcs = broken_circuits(n);
    const int one = a.min();
    std::vector<ElementSet> out;
    for_each_k_subset(a, n.rank(), [&](ElementSet b) {
        const ElementSet basis = a - b;
        if (!is_basis(ma, basis) || !avoids(b, bcs)) return;
        for (int x : b.without(one).elements())
            if (fundamental_circuit(ma, basis, x).min() == x) return;
        out.push_back(b);
    });
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::vector<LabeledCover> labeled_covers(const Matroid& m, const TFlatLattice& l, ElementSet a) {
    (void)l.index_of(a);
    ChainSearch search(m, l, a);
    std::set<std::pair<std::uint64_t, std::uint64_t>> used;
    for (const RawChain& c : search.all_chains())
        for (std::size_t i = 0; i + 1 < c.chain.size(); ++i) used.emplace(c.chain[i + 1].bits(), c.chain[i].bits());
    std::vector<LabeledCover> out;
    // search.sub ascends by size, so every upper is visited before its lowers
    std::set<std::uint64_t> reached{a.bits()};
    for (auto it = search.sub.rbegin(); it != search.sub.rend(); ++it) {
        const ElementSet upper = *it;
        for (ElementSet lower : search.covers(upper)) {
            LabeledCover lc;
            lc.lower = lower;
            lc.upper = upper;
            lc.qualified = search.qualified(lower, upper);
            lc.label = (upper - lower).min();
            lc.on_decreasing = used.count({lower.bits(), upper.bits()}) != 0;
            lc.reachable = reached.count(upper.bits()) != 0;
            if (lc.qualified && lc.reachable) reached.insert(lower.bits());
            out.push_back(lc);
        }
    }
    return out;
}

namespace {

int permutation_sign(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

BasicCycle build_basic_cycle(const Matroid& ma, const SimplicialComplex& reduced, ElementSet b) {
    const ElementSet a = ma.ground();
    const int one = a.min();
    if (!b.subset_of(a) || !b.contains(one))
        throw std::invalid_argument("basic_cycle: " + b.str() + " must lie in " + a.str() + " and contain " +
                                    std::to_string(one));
    const ElementSet basis = a - b;
    if (!is_basis(ma, basis)) throw std::invalid_argument("basic_cycle: " + b.str() + " is not a basis of the dual");

    std::map<int, ElementSet> by_value;
    for (int x : b.without(one).elements()) {
        const int i = fundamental_circuit(ma, basis, x).min();
        if (i == x)
            throw ConventionViolation("basic_cycle: " + std::to_string(x) + " is internally active in " + b.str());
        by_value[i].insert(i);
        by_value[i].insert(x);
    }
    BasicCycle out;
    out.b = b;
    std::vector<std::vector<int>> blocks;
    for (const auto& [i, blk] : by_value) {
        out.blocks.push_back(blk);
        blocks.push_back(blk.elements());
    }

    // join of the simplex boundaries: delete one element from every block
    std::vector<std::size_t> pick(blocks.size(), 0);
    for (;;) {
        std::vector<int> seq;
        std::size_t idx_sum = 0;
        ElementSet face;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            idx_sum += pick[j];
            for (std::size_t t = 0; t < blocks[j].size(); ++t)
                if (t != pick[j]) {
                    seq.push_back(blocks[j][t]);
                    face.insert(blocks[j][t]);
                }
        }
        if (!reduced.contains(face))
            throw ConventionViolation("basic_cycle: face " + face.str() + " of sigma-bar_" + b.str() +
                                      " is not in the reduced broken circuit complex");
        const int sign = (idx_sum % 2 == 0 ? 1 : -1) * permutation_sign(seq);
        add_to(out.chain, face, sign);

        std::size_t j = 0;
        while (j < blocks.size() && ++pick[j] == blocks[j].size()) pick[j++] = 0;
        if (j == blocks.size()) break;
    }

    const auto lead = out.chain.find(b.without(one));
    if (lead == out.chain.end() || abs(lead->second) != 1)
        throw ConventionViolation("basic_cycle: face " + b.without(one).str() + " does not have coefficient +-1");
    if (lead->second < 0)
        for (auto& [f, c] : out.chain) c = -c;
    return out;
}

// The basic cycles of (M|A)* together with the face list of size l(A).
struct CycleSystem {
    std::vector<ElementSet> index;
    std::vector<ElementSet> faces;
    std::vector<BasicCycle> cycles;
    std::vector<QVector> columns;
    SimplicialComplex complex = SimplicialComplex::void_complex(ElementSet{});

    CycleSystem(const Matroid& m, ElementSet a) {
        const Matroid ma = m.restrict(a);
        complex = reduced_bc_complex(ma.dual());
        const TFlatLattice l(ma);
        if (a.empty() || !l.contains(a)) return;
        faces = complex.faces(level(ma, a));
        for (const BnbcElement& e : bnbc_via_chains(ma, l, a)) {
            index.push_back(e.b);
            cycles.push_back(build_basic_cycle(ma, complex, e.b));
            QVector col;
            for (const Int& x : chain_vector(cycles.back().chain, faces)) col.emplace_back(x);
            columns.push_back(std::move(col));
        }
    }

    [[nodiscard]] std::optional<std::vector<Int>> coordinates(const Chain& z) const {
        QVector v;
        try {
            for (const Int& x : chain_vector(z, faces)) v.emplace_back(x);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
        auto c = in_span(v, columns);
        if (!c) return std::nullopt;
        std::vector<Int> out;
        for (const Rat& x : *c) {
            if (x.get_den() != 1) return std::nullopt;
            out.push_back(x.get_num());
        }
        return out;
    }
};

}  // namespace

BasicCycle basic_cycle(const Matroid& m, ElementSet a, ElementSet b) {
    const Matroid ma = m.restrict(a);
    return build_basic_cycle(ma, reduced_bc_complex(ma.dual()), b);
}

bool CycleBasisReport::unimodular() const {
    return invariant_factors.size() == beta &&
           std::all_of(invariant_factors.begin(), invariant_factors.end(), [](const Int& d) { return d == 1; });
}

CycleBasisReport cycle_basis_certificate(const Matroid& m, ElementSet a) {
    CycleBasisReport rep;
    const Matroid ma = m.restrict(a);
    const int l = level(ma, a);
    for (const HomologyGroup& h : reduced_homology(reduced_bc_complex(ma.dual()))) {
        if (h.degree == l - 1) rep.top_betti = h.betti;
    }
    rep.torsion_free = true;
    for (const HomologyGroup& h : reduced_homology(reduced_bc_complex(ma.dual())))
        if (!h.torsion.empty()) rep.torsion_free = false;
    try {
        const CycleSystem sys(m, a);
        rep.faces_in_complex = true;
        rep.beta = sys.cycles.size();
        rep.all_cycles = std::all_of(sys.cycles.begin(), sys.cycles.end(),
                                     [](const BasicCycle& c) { return boundary(c.chain).empty(); });
        ZMatrix z(sys.faces.size(), sys.cycles.size());
        for (std::size_t j = 0; j < sys.cycles.size(); ++j) {
            const auto v = chain_vector(sys.cycles[j].chain, sys.faces);
            for (std::size_t i = 0; i < v.size(); ++i) z(i, j) = v[i];
        }
        rep.invariant_factors = smith_normal_form(z).diagonal;
    } catch (const ConventionViolation&) {
        rep.faces_in_complex = false;
    }
    return rep;
}

std::optional<std::vector<Int>> cycle_coordinates(const Matroid& m, ElementSet a, const Chain& z) {
    return CycleSystem(m, a).coordinates(z);
}

Chain epsilon_chain(const Chain& c) { return c; }

Chain delta_chain(const Chain& c, int a) {
    Chain out;
    for (const auto& [face, coeff] : c)
        if (face.contains(a)) add_to(out, face.without(a), coeff);
    return out;
}

namespace {

ZMatrix zero_matrix(std::size_t r, std::size_t c) { return ZMatrix(r, c); }

std::size_t index_in(const std::vector<ElementSet>& v, ElementSet x) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

}  // namespace

HomologyMapsReport homology_maps(const Matroid& m) {
    HomologyMapsReport rep;
    const ElementSet s = m.ground();
    if (s.size() < 2) {
        rep.problems.push_back("ground set needs at least two elements");
        return rep;
    }
    const int a = s.max();
    rep.a = a;
    rep.level = level(m, s);
    const ElementSet rest = s.without(a);
    if (!is_connected(m)) rep.problems.push_back("matroid is disconnected");
    if (loops(m).contains(a)) rep.problems.push_back(std::to_string(a) + " is a loop");
    if (coloops(m).contains(a)) rep.problems.push_back(std::to_string(a) + " is a coloop");
    if (!TFlatLattice(m).contains(rest)) rep.problems.push_back(rest.str() + " is not a T-flat");
    if (!rep.problems.empty()) return rep;

    const CycleSystem full(m, s);
    const Matroid con = m.contract_element(a);  // (M/a)* = M* \ a
    const Matroid del = m.delete_element(a);    // (M\a)* = M* / a
    const CycleSystem dsys(con, rest);
    const CycleSystem csys(del, rest);

    rep.epsilon.domain = dsys.index;
    rep.epsilon.codomain = full.index;
    rep.epsilon.actual = zero_matrix(full.index.size(), dsys.index.size());
    rep.epsilon.expected = zero_matrix(full.index.size(), dsys.index.size());
    for (std::size_t j = 0; j < dsys.cycles.size(); ++j) {
        const auto coords = full.coordinates(epsilon_chain(dsys.cycles[j].chain));
        if (!coords) {
            rep.problems.push_back("epsilon image of " + dsys.index[j].str() + " is not an integral cycle combination");
            continue;
        }
        for (std::size_t i = 0; i < coords->size(); ++i) rep.epsilon.actual(i, j) = (*coords)[i];
        const std::size_t i = index_in(full.index, dsys.index[j]);
        if (i < full.index.size()) rep.epsilon.expected(i, j) = 1;
    }

    rep.delta.domain = full.index;
    rep.delta.codomain = csys.index;
    rep.delta.actual = zero_matrix(csys.index.size(), full.index.size());
    rep.delta.expected = zero_matrix(csys.index.size(), full.index.size());
    for (std::size_t j = 0; j < full.cycles.size(); ++j) {
        const auto coords = csys.coordinates(delta_chain(full.cycles[j].chain, a));
        if (!coords) {
            rep.problems.push_back("delta image of " + full.index[j].str() + " is not an integral cycle combination");
            continue;
        }
        for (std::size_t i = 0; i < coords->size(); ++i) rep.delta.actual(i, j) = (*coords)[i];
        if (full.index[j].contains(a)) {
            const std::size_t i = index_in(csys.index, full.index[j].without(a));
            if (i < csys.index.size()) rep.delta.expected(i, j) = 1;
        }
    }

    // delta commutes with the boundary and lands in the complex of M*/a
    bool chain_map = true;
    for (int k = 0; k <= full.complex.dimension() + 1 && chain_map; ++k)
        for (ElementSet f : full.complex.faces(k)) {
            const Chain single{{f, Int(1)}};
            const Chain image = delta_chain(single, a);
            for (const auto& [g, c] : image)
                if (!csys.complex.contains(g)) chain_map = false;
            if (boundary(image) != delta_chain(boundary(single), a)) chain_map = false;
        }
    rep.delta_chain_map = chain_map;

    const std::size_t re = rank(rep.epsilon.actual), rd = rank(rep.delta.actual);
    rep.exact = re == dsys.index.size() && rd == csys.index.size() &&
                (rep.delta.actual * rep.epsilon.actual).is_zero() &&
                full.index.size() == dsys.index.size() + csys.index.size();
    return rep;
}

namespace {

using ChainKey = std::pair<std::vector<int>, std::vector<std::uint64_t>>;

ChainKey key_of(const std::vector<int>& labels, const std::vector<ElementSet>& chain, ElementSet drop) {
    ChainKey k;
    k.first = labels;
    for (ElementSet t : chain) k.second.push_back((t - drop).bits());
    return k;
}

std::vector<RawChain> chains_at_ground(const Matroid& m) {
    const TFlatLattice l(m);
    if (m.ground().empty() || !l.contains(m.ground())) return {};
    return all_decreasing_chains(m, l, m.ground());
}

}  // namespace

ChainDecompositionReport chain_decomposition_check(const Matroid& m) {
    ChainDecompositionReport rep;
    const ElementSet s = m.ground();
    if (s.size() < 2) {
        rep.problems.push_back("ground set needs at least two elements");
        return rep;
    }
    const int a = s.max();
    rep.a = a;
    const ElementSet rest = s.without(a);
    if (!is_connected(m)) rep.problems.push_back("matroid is disconnected");
    if (!rep.problems.empty()) return rep;
    rep.complement_is_tflat = TFlatLattice(m).contains(rest);

    const auto chains = chains_at_ground(m);
    rep.chains_total = chains.size();
    std::vector<ChainKey> through, other;
    for (const RawChain& c : chains) {
        if (c.chain.size() > 1 && c.chain[1] == rest) {
            through.push_back(key_of({c.labels.begin() + 1, c.labels.end()}, {c.chain.begin() + 1, c.chain.end()},
                                     ElementSet{}));
        } else {
            other.push_back(key_of(c.labels, c.chain, ElementSet{a}));
        }
    }
    rep.chains_through = through.size();
    rep.chains_other = other.size();

    std::vector<ChainKey> del, con;
    for (const RawChain& c : chains_at_ground(m.delete_element(a))) del.push_back(key_of(c.labels, c.chain, {}));
    for (const RawChain& c : chains_at_ground(m.contract_element(a))) con.push_back(key_of(c.labels, c.chain, {}));
    std::sort(through.begin(), through.end());
    std::sort(other.begin(), other.end());
    std::sort(del.begin(), del.end());
    std::sort(con.begin(), con.end());
    rep.deletion_matches = through == del;
    rep.contraction_matches = other == con;
    return rep;
}

}  // namespace mrt

#include "mrt/matroid.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace mrt {

Representation Representation::from_matrix(QMatrix m) {
    Representation r;
    r.labels.resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) r.labels[j] = static_cast<int>(j) + 1;
    r.matrix = std::move(m);
    return r;
}

ElementSet Representation::ground() const { return ElementSet(labels); }

std::size_t Representation::column_index(int label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw std::out_of_range("representation has no column labelled " + std::to_string(label));
    return static_cast<std::size_t>(it - labels.begin());
}

QVector Representation::column(int label) const { return matrix.column(column_index(label)); }

std::vector<QVector> Representation::columns(ElementSet s) const {
    std::vector<QVector> out;
    for (int e : s.elements()) out.push_back(column(e));
    return out;
}

Representation Representation::restrict_to(ElementSet s) const {
    if (!s.subset_of(ground())) throw std::invalid_argument("restrict_to: not a subset of the ground set");
    Representation r;
    std::vector<std::size_t> idx;
    for (int e : s.elements()) {
        idx.push_back(column_index(e));
        r.labels.push_back(e);
    }
    r.matrix = matrix.select_columns(idx);
    return r;
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::representation: return "representation";
        case Provenance::uniform: return "uniform";
        case Provenance::dual: return "dual";
        case Provenance::restriction: return "restriction";
        case Provenance::contraction: return "contraction";
    }
    return "unknown";
}

struct Matroid::State {
    ElementSet ground;
    Provenance provenance = Provenance::representation;
    std::function<int(ElementSet)> raw;
    std::optional<Representation> rep;

    std::mutex mu;
    std::unordered_map<std::uint64_t, int> memo;
    std::once_flag circuits_once;
    std::vector<ElementSet> circuits;
};

Matroid Matroid::from_representation(const Representation& rep) {
    auto s = std::make_shared<State>();
    s->ground = rep.ground();
    if (s->ground.size() != static_cast<int>(rep.labels.size()))
        throw std::invalid_argument("representation labels must be distinct");
    s->provenance = Provenance::representation;
    s->rep = rep;
    const Representation* r = &*s->rep;
    s->raw = [r](ElementSet x) {
        std::vector<std::size_t> idx;
        for (int e : x.elements()) idx.push_back(r->column_index(e));
        return static_cast<int>(mrt::rank(r->matrix.select_columns(idx)));
    };
    return Matroid(std::move(s));
}

Matroid Matroid::from_matrix(const QMatrix& m) {
    return from_representation(Representation::from_matrix(m));
}

Matroid Matroid::uniform(int r, int n) {
    if (n < 0 || r < 0 || r > n) throw std::invalid_argument("uniform: need 0 <= r <= n");
    auto s = std::make_shared<State>();
    s->ground = ElementSet::range(n);
    s->provenance = Provenance::uniform;
    s->raw = [r](ElementSet x) { return std::min(x.size(), r); };
    return Matroid(std::move(s));
}

ElementSet Matroid::ground() const { return state_->ground; }

Provenance Matroid::provenance() const { return state_->provenance; }

const Representation* Matroid::representation() const {
    return state_->rep ? &*state_->rep : nullptr;
}

int Matroid::rank(ElementSet x) const {
    if (!x.subset_of(state_->ground))
        throw std::invalid_argument("rank: " + x.str() + " is not a subset of " + state_->ground.str());
    {
        std::lock_guard lock(state_->mu);
        auto it = state_->memo.find(x.bits());
        if (it != state_->memo.end()) return it->second;
    }
    const int v = state_->raw(x);
    std::lock_guard lock(state_->mu);
    state_->memo.emplace(x.bits(), v);
    return v;
}

Matroid Matroid::dual() const {
    auto s = std::make_shared<State>();
    s->ground = ground();
    s->provenance = Provenance::dual;
    const Matroid parent = *this;
    const ElementSet g = ground();
    const int rs = rank();
    s->raw = [parent, g, rs](ElementSet x) { return x.size() - rs + parent.rank(g - x); };
    return Matroid(std::move(s));
}

Matroid Matroid::restrict(ElementSet a) const {
    if (!a.subset_of(ground())) throw std::invalid_argument("restrict: " + a.str() + " not in ground set");
    auto s = std::make_shared<State>();
    s->ground = a;
    s->provenance = Provenance::restriction;
    const Matroid parent = *this;
    s->raw = [parent](ElementSet x) { return parent.rank(x); };
    return Matroid(std::move(s));
}

Matroid Matroid::contract(ElementSet a) const {
    if (!a.subset_of(ground())) throw std::invalid_argument("contract: " + a.str() + " not in ground set");
    auto s = std::make_shared<State>();
    s->ground = ground() - a;
    s->provenance = Provenance::contraction;
    const Matroid parent = *this;
    const int ra = rank(a);
    s->raw = [parent, a, ra](ElementSet x) { return parent.rank(x | a) - ra; };
    return Matroid(std::move(s));
}

Matroid Matroid::delete_element(int a) const {
    if (!ground().contains(a)) throw std::invalid_argument("delete: element not in ground set");
    return restrict(ground().without(a));
}

Matroid Matroid::contract_element(int a) const {
    if (!ground().contains(a)) throw std::invalid_argument("contract: element not in ground set");
    return contract(ElementSet{a});
}

const std::vector<ElementSet>& Matroid::circuits() const {
    std::call_once(state_->circuits_once, [this] {
        std::vector<ElementSet> found;
        const int cap = std::min(size(), rank() + 1);
        for (int k = 1; k <= cap; ++k) {
            for_each_k_subset(ground(), k, [&](ElementSet x) {
                for (ElementSet c : found)
                    if (c.subset_of(x)) return;
                // every proper subset is independent once no smaller circuit sits inside
                if (rank(x) < k) found.push_back(x);
            });
        }
        std::sort(found.begin(), found.end(), ElementSet::SizeLexLess{});
        state_->circuits = std::move(found);
    });
    return state_->circuits;
}

int level(const Matroid& m, ElementSet a) { return a.size() - m.rank(a) - 1; }

bool is_independent(const Matroid& m, ElementSet a) { return m.rank(a) == a.size(); }

bool is_basis(const Matroid& m, ElementSet a) {
    return a.subset_of(m.ground()) && is_independent(m, a) && a.size() == m.rank();
}

ElementSet closure(const Matroid& m, ElementSet a) {
    const int ra = m.rank(a);
    ElementSet out = a;
    for (int x : (m.ground() - a).elements())
        if (m.rank(a.with(x)) == ra) out.insert(x);
    return out;
}

ElementSet loops(const Matroid& m) { return closure(m, ElementSet{}); }

ElementSet coloops(const Matroid& m) { return loops(m.dual()); }

bool is_connected(const Matroid& m) {
    const auto elems = m.ground().elements();
    if (elems.size() <= 1) return true;
    const auto& cs = m.circuits();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const bool shared = std::any_of(cs.begin(), cs.end(), [&](ElementSet c) {
                return c.contains(elems[i]) && c.contains(elems[j]);
            });
            if (!shared) return false;
        }
    return true;
}

ElementSet lex_greatest_basis(const Matroid& m, ElementSet a) {
    ElementSet basis;
    auto elems = a.elements();
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
        const ElementSet grown = basis.with(*it);
        if (m.rank(grown) == grown.size()) basis = grown;
    }
    return basis;
}

ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int x) {
    if (basis.contains(x)) throw std::invalid_argument("fundamental_circuit: element lies in the basis");
    const ElementSet span = basis.with(x);
    const int r = m.rank(basis);
    if (m.rank(span) != r) throw std::invalid_argument("fundamental_circuit: element not spanned by basis");
    ElementSet c{x};
    for (int y : basis.elements())
        if (m.rank(span.without(y)) == r) c.insert(y);
    return c;
}

std::vector<ElementSet> flats(const Matroid& m) {
    std::unordered_map<std::uint64_t, bool> seen;
    std::vector<ElementSet> out;
    for_each_subset(m.ground(), [&](ElementSet x) {
        const ElementSet f = closure(m, x);
        if (seen.emplace(f.bits(), true).second) out.push_back(f);
    });
    std::sort(out.begin(), out.end(), [&](ElementSet a, ElementSet b) {
        const int ra = m.rank(a), rb = m.rank(b);
        if (ra != rb) return ra < rb;
        return ElementSet::SizeLexLess{}(a, b);
    });
    return out;
}

bool same_rank_function(const Matroid& a, const Matroid& b) {
    if (a.ground() != b.ground()) return false;
    bool same = true;
    for_each_subset(a.ground(), [&](ElementSet x) {
        if (same && a.rank(x) != b.rank(x)) same = false;
    });
    return same;
}

}  // namespace mrt

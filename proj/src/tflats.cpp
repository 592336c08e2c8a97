#include "mrt/tflats.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace mrt {

namespace {

// M|A is connected iff the circuits inside A link all of A; the "lies in a
// common circuit" relation is transitive, so union-find over circuits works.
bool restriction_connected(const std::vector<ElementSet>& circuits, ElementSet a) {
    if (a.size() <= 1) return true;
    std::vector<int> parent(ElementSet::kMaxElement + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    ElementSet covered;
    for (ElementSet c : circuits) {
        if (!c.subset_of(a)) continue;
        covered = covered | c;
        const int root = find(c.min());
        for (int e : c.elements()) parent[find(e)] = root;
    }
    if (covered != a) return false;
    const int root = find(a.min());
    for (int e : a.elements())
        if (find(e) != root) return false;
    return true;
}

}  // namespace

TFlatLattice::TFlatLattice(const Matroid& m) {
    const auto& circs = m.circuits();
    std::unordered_set<ElementSet> seen(circs.begin(), circs.end());
    std::vector<ElementSet> all(seen.begin(), seen.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const ElementSet u = all[i] | all[j];
            if (seen.insert(u).second) all.push_back(u);
        }
    }
    std::sort(all.begin(), all.end(), ElementSet::SizeLexLess{});
    tflats_ = std::move(all);

    for (std::size_t i = 0; i < tflats_.size(); ++i) index_.emplace(tflats_[i], i);
    levels_.reserve(tflats_.size());
    connected_.reserve(tflats_.size());
    for (ElementSet t : tflats_) {
        levels_.push_back(mrt::level(m, t));
        connected_.push_back(restriction_connected(circs, t));
    }

    lower_.resize(tflats_.size());
    for (std::size_t u = 0; u < tflats_.size(); ++u) {
        const ElementSet upper = tflats_[u];
        std::vector<std::size_t> below;
        for (std::size_t d = 0; d < u; ++d)
            if (tflats_[d].proper_subset_of(upper)) below.push_back(d);
        // sorted by size, so anything strictly between comes later in `below`
        for (std::size_t k = 0; k < below.size(); ++k) {
            const ElementSet low = tflats_[below[k]];
            bool maximal = true;
            for (std::size_t q = k + 1; q < below.size() && maximal; ++q)
                if (low.proper_subset_of(tflats_[below[q]])) maximal = false;
            if (maximal) lower_[u].push_back(below[k]);
        }
    }
}

std::size_t TFlatLattice::index_of(ElementSet a) const {
    auto it = index_.find(a);
    if (it == index_.end()) throw std::invalid_argument(a.str() + " is not a T-flat");
    return it->second;
}

std::vector<ElementSet> TFlatLattice::lower_covers(ElementSet a) const {
    std::vector<ElementSet> out;
    for (std::size_t i : lower_[index_of(a)]) out.push_back(tflats_[i]);
    return out;
}

std::vector<std::pair<ElementSet, ElementSet>> TFlatLattice::covers() const {
    std::vector<std::pair<ElementSet, ElementSet>> out;
    for (std::size_t u = 0; u < tflats_.size(); ++u)
        for (std::size_t d : lower_[u]) out.emplace_back(tflats_[d], tflats_[u]);
    return out;
}

ElementSet TFlatLattice::top() const {
    if (tflats_.empty()) throw std::logic_error("lattice has no T-flats");
    return tflats_.back();
}

std::vector<ElementSet> tspace_poset(const TFlatLattice& l, ElementSet a) {
    (void)l.index_of(a);
    std::vector<ElementSet> out;
    for (ElementSet t : l.tflats())
        if (t.subset_of(a) && (t == a || l.connected(t))) out.push_back(t);
    return out;
}

std::vector<std::pair<ElementSet, long long>> mobius_row(const TFlatLattice& l, ElementSet a) {
    const auto poset = tspace_poset(l, a);
    std::vector<std::pair<ElementSet, long long>> row;
    row.reserve(poset.size());
    // descending size: every Z strictly above B is settled before B
    for (auto it = poset.rbegin(); it != poset.rend(); ++it) {
        const ElementSet b = *it;
        long long v = 0;
        if (b == a) {
            v = 1;
        } else {
            for (const auto& [z, mz] : row)
                if (b.proper_subset_of(z)) v -= mz;
        }
        row.emplace_back(b, v);
    }
    std::reverse(row.begin(), row.end());
    return row;
}

long long mobius(const TFlatLattice& l, ElementSet a, ElementSet b) {
    if (!b.subset_of(a)) throw std::invalid_argument("mobius: " + b.str() + " is not inside " + a.str());
    for (const auto& [z, v] : mobius_row(l, a))
        if (z == b) return v;
    throw std::invalid_argument("mobius: " + b.str() + " is not a connected T-flat below " + a.str());
}

long long beta_crapo(const Matroid& m) {
    if (!loops(m).empty()) return 0;
    const auto fl = flats(m);
    // fl is sorted by rank, so every proper subflat precedes its superflats
    std::vector<long long> mu(fl.size(), 0);
    long long sum = 0;
    for (std::size_t i = 0; i < fl.size(); ++i) {
        if (i == 0) {
            mu[i] = 1;
        } else {
            long long v = 0;
            for (std::size_t j = 0; j < i; ++j)
                if (fl[j].proper_subset_of(fl[i])) v -= mu[j];
            mu[i] = v;
        }
        sum += mu[i] * m.rank(fl[i]);
    }
    return (m.rank() % 2 == 0) ? sum : -sum;
}

namespace {

struct DelCon {
    const Matroid& m;
    std::map<std::pair<std::uint64_t, std::uint64_t>, long long> memo;

    // Minor with `del` deleted and `con` contracted.
    long long beta(ElementSet del, ElementSet con) {
        const ElementSet g = m.ground() - del - con;
        if (g.empty()) return 0;
        const auto key = std::make_pair(del.bits(), con.bits());
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const int rc = m.rank(con);
        const int rfull = m.rank(g | con);
        int pick = 0;
        bool has_loop = false;
        bool single_coloop = false;
        for (int e : g.elements()) {
            const bool loop = m.rank(con.with(e)) == rc;
            const bool coloop = rfull - m.rank((g | con).without(e)) == 1;
            if (loop) has_loop = true;
            if (g.size() == 1) single_coloop = coloop;
            if (!loop && !coloop) pick = e;
        }
        long long v = 0;
        if (g.size() == 1)
            v = single_coloop ? 1 : 0;
        else if (has_loop || pick == 0)
            v = 0;
        else
            v = beta(del.with(pick), con) + beta(del, con.with(pick));
        memo.emplace(key, v);
        return v;
    }
};

}  // namespace

long long beta_delcon(const Matroid& m) {
    DelCon d{m, {}};
    return d.beta(ElementSet{}, ElementSet{});
}

long long dim_tspace(const Matroid& m, const TFlatLattice& l, ElementSet a) {
    long long sum = 0;
    for (const auto& [b, mu] : mobius_row(l, a)) sum += mu * (level(m, b) + 1);
    return level(m, a) % 2 == 0 ? sum : -sum;
}

}  // namespace mrt

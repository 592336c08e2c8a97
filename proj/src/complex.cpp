#include "mrt/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mrt {

SimplicialComplex SimplicialComplex::void_complex(ElementSet vertices) {
    SimplicialComplex k;
    k.vertices_ = vertices;
    return k;
}

SimplicialComplex SimplicialComplex::from_faces(ElementSet vertices, const std::vector<ElementSet>& faces) {
    SimplicialComplex k;
    k.vertices_ = vertices;
    k.void_ = false;
    std::vector<ElementSet> sorted = faces;
    for (ElementSet f : sorted)
        if (!f.subset_of(vertices)) throw std::invalid_argument("face " + f.str() + " uses a foreign vertex");
    sorted.push_back(ElementSet{});
    std::sort(sorted.begin(), sorted.end(), ElementSet::SizeLexLess{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < sorted.size() && maximal; ++j)
            if (sorted[i].proper_subset_of(sorted[j])) maximal = false;
        if (maximal) k.facets_.push_back(sorted[i]);
    }
    return k;
}

int SimplicialComplex::dimension() const {
    if (void_) return -2;
    int d = -1;
    for (ElementSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (void_) return true;
    return std::all_of(facets_.begin(), facets_.end(), [&](ElementSet f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(ElementSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](ElementSet f) { return face.subset_of(f); });
}

std::vector<ElementSet> SimplicialComplex::faces(int k) const {
    std::unordered_set<ElementSet> seen;
    std::vector<ElementSet> out;
    for (ElementSet f : facets_)
        for_each_k_subset(f, k, [&](ElementSet s) {
            if (seen.insert(s).second) out.push_back(s);
        });
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (int k = 0; k <= dimension() + 1; ++k) n += faces(k).size();
    return n;
}

void add_to(Chain& c, ElementSet face, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = c.emplace(face, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

int boundary_sign(ElementSet face, int vertex) {
    const int i = face.index_of(vertex);
    if (i < 0) throw std::invalid_argument("boundary_sign: vertex not in face");
    return i % 2 == 0 ? 1 : -1;
}

Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [face, coeff] : c)
        for (int v : face.elements()) add_to(out, face.without(v), boundary_sign(face, v) * coeff);
    return out;
}

ZMatrix boundary_matrix(const std::vector<ElementSet>& lower, const std::vector<ElementSet>& upper) {
    std::unordered_map<ElementSet, std::size_t> row;
    for (std::size_t i = 0; i < lower.size(); ++i) row.emplace(lower[i], i);
    ZMatrix d(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j)
        for (int v : upper[j].elements()) {
            auto it = row.find(upper[j].without(v));
            if (it == row.end()) throw std::logic_error("boundary_matrix: face list not closed under boundary");
            d(it->second, j) = boundary_sign(upper[j], v);
        }
    return d;
}

std::vector<Int> chain_vector(const Chain& c, const std::vector<ElementSet>& faces) {
    std::unordered_map<ElementSet, std::size_t> idx;
    for (std::size_t i = 0; i < faces.size(); ++i) idx.emplace(faces[i], i);
    std::vector<Int> v(faces.size(), Int(0));
    for (const auto& [face, coeff] : c) {
        auto it = idx.find(face);
        if (it == idx.end()) throw std::invalid_argument("chain_vector: " + face.str() + " is not among the faces");
        v[it->second] = coeff;
    }
    return v;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k) {
    std::vector<HomologyGroup> out;
    if (k.is_void()) return out;
    const int top = k.dimension() + 1;  // largest face size
    std::vector<std::vector<ElementSet>> faces(static_cast<std::size_t>(top) + 2);
    for (int s = 0; s <= top; ++s) faces[static_cast<std::size_t>(s)] = k.faces(s);

    // snf[s]: Smith form of the boundary from size-s faces to size-(s-1) faces
    std::vector<SmithForm> snf(static_cast<std::size_t>(top) + 2);
    for (int s = 1; s <= top; ++s)
        snf[static_cast<std::size_t>(s)] =
            smith_normal_form(boundary_matrix(faces[static_cast<std::size_t>(s) - 1], faces[static_cast<std::size_t>(s)]));

    for (int s = 0; s <= top; ++s) {
        const auto us = static_cast<std::size_t>(s);
        HomologyGroup h;
        h.degree = s - 1;
        const std::size_t cycles = faces[us].size() - snf[us].rank;
        h.betti = cycles - snf[us + 1].rank;
        for (const Int& d : snf[us + 1].diagonal)
            if (d > 1) h.torsion.push_back(d);
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace mrt

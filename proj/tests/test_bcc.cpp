#include <doctest.h>

#include <algorithm>

#include "mrt/bcc.hpp"
#include "oracles.hpp"

using namespace mrt;
using oracle::set_of;

namespace {

std::vector<ElementSet> sets(std::initializer_list<const char*> xs) {
    std::vector<ElementSet> out;
    for (const char* x : xs) out.push_back(set_of(x));
    return out;
}

std::vector<ElementSet> bs(const std::vector<BnbcElement>& v) {
    std::vector<ElementSet> out;
    for (const auto& e : v) out.push_back(e.b);
    return out;
}

std::vector<ElementSet> sorted_lex(std::vector<ElementSet> v) {
    std::sort(v.begin(), v.end(), LexLess{});
    return v;
}

const HomologyGroup* degree(const std::vector<HomologyGroup>& h, int d) {
    for (const auto& g : h)
        if (g.degree == d) return &g;
    return nullptr;
}

}  // namespace

TEST_CASE("homology of small complexes") {
    const auto hollow = SimplicialComplex::from_faces(set_of("123"), sets({"12", "13", "23"}));
    auto h = reduced_homology(hollow);
    REQUIRE(h.size() == 3);
    CHECK(degree(h, -1)->betti == 0);
    CHECK(degree(h, 0)->betti == 0);
    CHECK(degree(h, 1)->betti == 1);

    const auto empty = SimplicialComplex::from_faces(ElementSet{}, {});
    h = reduced_homology(empty);
    REQUIRE(h.size() == 1);
    CHECK(h[0].degree == -1);
    CHECK(h[0].betti == 1);

    CHECK(reduced_homology(SimplicialComplex::void_complex(set_of("12"))).empty());

    const auto two_points = SimplicialComplex::from_faces(set_of("12"), sets({"1", "2"}));
    CHECK(degree(reduced_homology(two_points), 0)->betti == 1);

    const auto full = SimplicialComplex::from_faces(set_of("1234"), sets({"1234"}));
    for (const auto& g : reduced_homology(full)) CHECK(g.betti == 0);
}

TEST_CASE("boundary squares to zero") {
    Chain c;
    add_to(c, set_of("1234"), 1);
    add_to(c, set_of("235"), 3);
    CHECK(boundary(boundary(c)).empty());
    CHECK(boundary(Chain{{set_of("7"), Int(2)}}) == Chain{{ElementSet{}, Int(2)}});
    const auto full = SimplicialComplex::from_faces(set_of("12345"), sets({"12345"}));
    for (int k = 2; k <= 5; ++k) {
        const ZMatrix prod = boundary_matrix(full.faces(k - 2), full.faces(k - 1)) *
                             boundary_matrix(full.faces(k - 1), full.faces(k));
        CHECK(prod.is_zero());
    }
}

TEST_CASE("worked example: broken circuits, complexes and beta-nbc") {
    const Matroid m = Matroid::from_matrix(oracle::worked_phi());
    const Matroid n = m.dual();
    CHECK(n.circuits() == sets({"235", "1234", "1245", "1345"}));
    CHECK(sorted_lex(broken_circuits(n)) == sorted_lex(sets({"35", "345", "245", "234"})));
    CHECK(sorted_lex(bc_complex(n).facets()) == sets({"123", "124", "125", "134", "145"}));
    CHECK(brylawski_properties(n).ok());

    const TFlatLattice l(m);
    const auto top = bnbc_via_chains(m, l, m.ground());
    REQUIRE(top.size() == 2);
    CHECK(top[0].b == set_of("134"));
    CHECK(top[0].labels == std::vector<int>{4, 3});
    CHECK(top[0].chain == sets({"12345", "1235", "125"}));
    CHECK(top[1].b == set_of("145"));
    CHECK(top[1].labels == std::vector<int>{5, 4});
    CHECK(top[1].chain == sets({"12345", "1234", "123"}));

    CHECK(bs(bnbc_via_chains(m, l, set_of("1234"))) == sets({"14"}));
    CHECK(bs(bnbc_via_chains(m, l, set_of("1245"))) == sets({"14"}));
    CHECK(bs(bnbc_via_chains(m, l, set_of("1345"))) == sets({"14"}));
    CHECK(bs(bnbc_via_chains(m, l, set_of("1235"))) == sets({"13", "15"}));
    CHECK(bs(bnbc_via_chains(m, l, set_of("2345"))) == sets({"24", "25"}));
    CHECK(bs(bnbc_via_chains(m, l, set_of("135"))) == sets({"1"}));
    CHECK(bnbc_by_activity(m, m.ground()) == sets({"134", "145"}));

    const auto h = reduced_homology(reduced_bc_complex(n));
    for (const auto& g : h) {
        CHECK(g.torsion.empty());
        CHECK(g.betti == (g.degree == 1 ? 2u : 0u));
    }
}

TEST_CASE("worked example: basic cycles and the homology sequence") {
    const Matroid m = Matroid::from_matrix(oracle::worked_phi());
    const BasicCycle s145 = basic_cycle(m, m.ground(), set_of("145"));
    CHECK(s145.blocks == sets({"245"}));
    CHECK(boundary(s145.chain).empty());
    CHECK(s145.chain.at(set_of("45")) == 1);

    const auto cert = cycle_basis_certificate(m, m.ground());
    CHECK(cert.ok());
    CHECK(cert.beta == 2);

    const auto maps = homology_maps(m);
    CHECK(maps.problems.empty());
    CHECK(maps.ok());
    CHECK(maps.a == 5);
    CHECK(maps.delta.domain == sets({"134", "145"}));
    CHECK(maps.delta.codomain == sets({"14"}));
    CHECK(maps.delta.actual == ZMatrix::from_rows({{0, 1}}));
    CHECK(maps.epsilon.domain == sets({"134"}));
    CHECK(maps.epsilon.actual == ZMatrix::from_rows({{1}, {0}}));

    const auto dec = chain_decomposition_check(m);
    CHECK(dec.ok());
    CHECK(dec.complement_is_tflat);
    CHECK(dec.chains_through == 1);
    CHECK(dec.chains_other == 1);
}

TEST_CASE("uniform broken circuit complexes") {
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            CAPTURE(r);
            CAPTURE(n);
            const Matroid u = Matroid::uniform(r, n);
            std::vector<ElementSet> expected;
            for_each_k_subset(ElementSet::range(n).without(1), r, [&](ElementSet x) { expected.push_back(x); });
            CHECK(sorted_lex(broken_circuits(u)) == sorted_lex(expected));

            std::vector<ElementSet> facets;
            for_each_k_subset(ElementSet::range(n).without(1), r - 1, [&](ElementSet x) { facets.push_back(x); });
            CHECK(sorted_lex(reduced_bc_complex(u).facets()) == sorted_lex(facets));
            CHECK(brylawski_properties(u).ok());

            std::vector<ElementSet> bnbc;
            for_each_k_subset(ElementSet::range(n), n - r, [&](ElementSet x) {
                if (x.contains(1) && !x.contains(2)) bnbc.push_back(x);
            });
            CHECK(bs(bnbc_of_ground(u)) == sorted_lex(bnbc));
        }
    CHECK(broken_circuits(Matroid::from_matrix(QMatrix::identity(3))).empty());
    CHECK(bc_complex(Matroid::from_matrix(QMatrix::identity(3))).facets() == sets({"123"}));
    CHECK(bc_complex(Matroid::from_matrix(QMatrix::from_rows({{1, 0}}))).is_void());
}

TEST_CASE("property: random matroids, every T-flat") {
    std::size_t multi_chain = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CAPTURE(seed);
        const Matroid m = Matroid::from_matrix(oracle::random_matrix(seed));
        const TFlatLattice l(m);
        if (loops(m).empty()) CHECK(brylawski_properties(m).ok());
        for (ElementSet a : l.tflats()) {
            CAPTURE(a);
            const auto chains = bnbc_via_chains(m, l, a);
            CHECK(bs(chains) == bnbc_by_activity(m, a));
            CHECK(static_cast<long long>(chains.size()) == dim_tspace(m, l, a));
            for (const auto& e : chains) {
                multi_chain += e.chain_count > 1;
                CHECK(e.b.size() == l.level(a) + 1);
                CHECK(std::is_sorted(e.labels.rbegin(), e.labels.rend()));
                CHECK(std::adjacent_find(e.labels.begin(), e.labels.end()) == e.labels.end());
            }

            const Matroid n = m.restrict(a).dual();
            CHECK(brylawski_properties(n).ok());
            const auto h = reduced_homology(reduced_bc_complex(n));
            for (const auto& g : h) {
                CHECK(g.torsion.empty());
                CHECK(g.betti == (g.degree == l.level(a) - 1 ? chains.size() : 0u));
            }
            const auto cert = cycle_basis_certificate(m, a);
            CHECK(cert.ok());
        }

        if (is_connected(m) && m.size() >= 2) {
            CHECK(chain_decomposition_check(m).ok());
            const auto maps = homology_maps(m);
            if (maps.problems.empty()) CHECK(maps.ok());
        }
    }
    CHECK(multi_chain == 0);
}

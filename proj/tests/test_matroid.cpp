#include <doctest.h>

#include <random>

#include "mrt/matroid.hpp"
#include "oracles.hpp"

using namespace mrt;
using oracle::set_of;

namespace {

std::vector<ElementSet> sets(std::initializer_list<const char*> xs) {
    std::vector<ElementSet> out;
    for (const char* x : xs) out.push_back(set_of(x));
    return out;
}

}  // namespace

TEST_CASE("worked example circuits and basics") {
    const Matroid m = Matroid::from_matrix(oracle::worked_phi());
    CHECK(m.rank() == 2);
    CHECK(m.size() == 5);
    CHECK(m.circuits() == sets({"14", "123", "125", "135", "234", "235", "245", "345"}));
    CHECK(level(m, m.ground()) == 2);
    CHECK(level(m, set_of("25")) == -1);
    for (ElementSet c : m.circuits()) CHECK(level(m, c) == 0);
    CHECK(is_connected(m));
    CHECK(closure(m, set_of("1")) == set_of("14"));
    CHECK(closure(m, m.ground()) == m.ground());
    CHECK(lex_greatest_basis(m, set_of("2345")) == set_of("45"));
    CHECK(lex_greatest_basis(m, set_of("235")) == set_of("35"));
    CHECK(lex_greatest_basis(m, set_of("25")) == set_of("25"));
    CHECK(m.delete_element(5).circuits() == sets({"14", "123", "234"}));
    CHECK(fundamental_circuit(m, set_of("45"), 2) == set_of("245"));
}

TEST_CASE("loops, coloops and free matroids") {
    const Matroid z = Matroid::from_matrix(QMatrix::from_rows({{1, 0, 2}, {0, 0, 1}}));
    CHECK(z.rank(set_of("2")) == 0);
    CHECK(loops(z) == set_of("2"));
    CHECK_FALSE(is_connected(z));

    const Matroid free = Matroid::from_matrix(QMatrix::identity(3));
    CHECK(free.circuits().empty());
    CHECK(coloops(free) == free.ground());
    CHECK_FALSE(is_connected(free));

    CHECK(is_connected(Matroid::from_matrix(QMatrix::from_rows({{0}}))));
    CHECK(is_connected(Matroid::uniform(0, 0)));
}

TEST_CASE("uniform matroids") {
    CHECK(Matroid::uniform(2, 4).circuits() == sets({"123", "124", "134", "234"}));
    CHECK(loops(Matroid::uniform(0, 3)) == ElementSet::range(3));
    CHECK(Matroid::uniform(3, 3).circuits().empty());
    CHECK(coloops(Matroid::uniform(3, 3)) == ElementSet::range(3));
    CHECK_THROWS_AS((void)Matroid::uniform(4, 3), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(same_rank_function(Matroid::uniform(r, n).dual(), Matroid::uniform(n - r, n)));
}

TEST_CASE("minors keep labels and reject foreign sets") {
    const Matroid m = Matroid::from_matrix(oracle::worked_phi());
    const Matroid c = m.contract_element(5);
    CHECK(c.ground() == set_of("1234"));
    CHECK(c.rank() == 1);
    CHECK(c.provenance() == Provenance::contraction);
    CHECK(m.restrict(set_of("135")).ground() == set_of("135"));
    CHECK_THROWS_AS((void)m.restrict(set_of("16")), std::invalid_argument);
    CHECK_THROWS_AS((void)m.rank(set_of("6")), std::invalid_argument);
    CHECK_THROWS_AS((void)m.delete_element(7), std::invalid_argument);
    CHECK(m.representation() != nullptr);
    CHECK(c.representation() == nullptr);
}

TEST_CASE("property: random represented matroids") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const QMatrix phi = oracle::random_matrix(seed);
        const Matroid m = Matroid::from_matrix(phi);
        const ElementSet s = m.ground();
        CAPTURE(seed);

        bool ranks_match = true, axioms = true;
        for_each_subset(s, [&](ElementSet x) {
            if (m.rank(x) != oracle::column_rank(phi, x)) ranks_match = false;
            for (int e : (s - x).elements()) {
                const int d = m.rank(x.with(e)) - m.rank(x);
                if (d < 0 || d > 1) axioms = false;
            }
        });
        CHECK(ranks_match);
        CHECK(axioms);
        CHECK(m.rank(ElementSet{}) == 0);

        std::mt19937_64 rng(seed);
        for (int t = 0; t < 30; ++t) {
            const ElementSet a = ElementSet::from_bits(rng()) & s, b = ElementSet::from_bits(rng()) & s;
            CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
        }

        auto rank_fn = [&](ElementSet x) { return m.rank(x); };
        CHECK(m.circuits() == oracle::circuits(s, rank_fn));

        // circuits are supports of kernel vectors of minimally dependent column sets
        for (ElementSet c : m.circuits()) {
            std::vector<std::size_t> idx;
            for (int e : c.elements()) idx.push_back(static_cast<std::size_t>(e - 1));
            const auto ker = kernel_basis(phi.select_columns(idx));
            REQUIRE(ker.size() == 1);
            for (const auto& x : ker[0]) CHECK(x != 0);
        }

        CHECK(same_rank_function(m.dual().dual(), m));
        for (int a : s.elements()) {
            CHECK(same_rank_function(m.delete_element(a).dual(), m.dual().contract_element(a)));
            CHECK(same_rank_function(m.contract_element(a).dual(), m.dual().delete_element(a)));
        }

        const ElementSet half = ElementSet::from_bits(seed * 0x9E3779B97F4A7C15ULL) & s;
        std::vector<ElementSet> inside;
        for (ElementSet c : m.circuits())
            if (c.subset_of(half)) inside.push_back(c);
        CHECK(m.restrict(half).circuits() == inside);

        for (ElementSet c : m.circuits()) CHECK(level(m, c) == 0);
        const ElementSet lgb = lex_greatest_basis(m, s);
        CHECK(is_basis(m, lgb));
    }
}

#include "mrt/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mrt/bcc.hpp"
#include "mrt/multspace.hpp"
#include "mrt/tflats.hpp"

namespace mrt {

namespace {

// Collects the first counterexample of a property checked over many cases.
class Tally {
  public:
    explicit Tally(std::string name) : name_(std::move(name)) {}
    void expect(bool ok, const std::string& where) {
        ++cases_;
        if (!ok && detail_.empty()) detail_ = where;
    }
    void skip(std::string reason) { skip_ = std::move(reason); }
    [[nodiscard]] Check result() const {
        if (!skip_.empty()) return {name_, CheckStatus::skip, skip_};
        if (!detail_.empty()) return {name_, CheckStatus::fail, detail_};
        return {name_, CheckStatus::pass, std::to_string(cases_) + (cases_ == 1 ? " case" : " cases")};
    }

  private:
    std::string name_;
    std::string detail_;
    std::string skip_;
    std::size_t cases_ = 0;
};

bool homology_concentrated(const std::vector<HomologyGroup>& h, int top, std::size_t rank) {
    return std::all_of(h.begin(), h.end(), [&](const HomologyGroup& g) {
        return g.torsion.empty() && g.betti == (g.degree == top ? rank : 0u);
    });
}

std::string scales(const DiagramReport& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : d.pi_scale) {
        if (c == 1) continue;
        os << (first ? "" : ", ") << "pi(x_" << b.str() << ") = " << c.get_str() << " x-bar";
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skip: return "SKIP";
    }
    return "?";
}

bool all_passed(const std::vector<Check>& checks) {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

std::vector<Check> verify_suite(const Representation& rep) {
    const Matroid m = Matroid::from_representation(rep);
    const TFlatLattice l(m);
    const ElementSet s = m.ground();

    Tally circuits("circuits are minimal dependent sets");
    for (ElementSet c : m.circuits()) {
        bool ok = m.rank(c) == c.size() - 1;
        for (int e : c.elements()) ok = ok && m.rank(c.without(e)) == c.size() - 1;
        circuits.expect(ok, c.str());
    }

    Tally lattice("T-flats are unions of circuits; covers differ in level by one");
    for (ElementSet a : l.tflats()) {
        ElementSet u;
        for (ElementSet c : m.circuits())
            if (c.subset_of(a)) u = u | c;
        lattice.expect(u == a, a.str());
    }
    for (const auto& [lo, up] : l.covers()) lattice.expect(l.level(up) == l.level(lo) + 1, lo.str() + " < " + up.str());

    Tally beta("beta: Crapo, deletion-contraction, Mobius dimension and beta-nbc agree");
    Tally sign("beta: positive exactly on connected T-flats");
    Tally bnbc("beta-nbc: decreasing chains agree with internal activity");
    Tally homology("homology of the reduced complex is torsion-free and concentrated in degree l(A)-1");
    Tally brylawski("broken circuit complexes: Brylawski properties");
    Tally cycles("basic cycles: integral basis of top homology");
    Tally basis("multiplicity space: the x_B are independent of degree l(A)");
    const VCoords vc = VCoords::pivot(rep);
    for (ElementSet a : l.tflats()) {
        const std::string where = a.str();
        const Matroid dual = m.restrict(a).dual();
        const auto chains = bnbc_via_chains(m, l, a);
        const long long dim = dim_tspace(m, l, a);
        beta.expect(beta_crapo(dual) == dim && beta_delcon(dual) == dim &&
                        static_cast<long long>(chains.size()) == dim,
                    where);
        sign.expect((dim > 0) == l.connected(a) && dim >= 0, where);

        std::vector<ElementSet> from_chains;
        for (const auto& e : chains) from_chains.push_back(e.b);
        bnbc.expect(from_chains == bnbc_by_activity(m, a), where);

        homology.expect(homology_concentrated(reduced_homology(reduced_bc_complex(dual)), l.level(a) - 1,
                                              chains.size()),
                        where);
        if (loops(dual).empty()) brylawski.expect(brylawski_properties(dual).ok(), where);
        cycles.expect(cycle_basis_certificate(m, a).ok(), where);

        const auto mb = multiplicity_basis(rep, vc, a);
        bool degrees = true;
        for (const auto& e : mb.elements) degrees = degrees && e.xb.degree() == l.level(a);
        basis.expect(mb.independent() && mb.wedge_labels_ok && degrees &&
                         static_cast<long long>(mb.elements.size()) == dim,
                     where);
    }

    Tally delcon("beta(M) = beta(M\\a) + beta(M/a) for a = max S");
    Tally decomposition("decreasing chains split at S\\a");
    Tally maps("homology maps: epsilon and delta closed forms, exact sequence");
    Tally sequence("multiplicity spaces: nu injective, pi surjective, exact");
    Tally nu("diagram: the nu square commutes");
    Tally pi("diagram: the pi square commutes");
    if (s.empty() || !is_connected(m) || m.size() < 2) {
        const std::string why = "needs a connected matroid on at least two elements";
        for (Tally* t : {&delcon, &decomposition, &maps, &sequence, &nu, &pi}) t->skip(why);
    } else {
        // connected with |S| >= 2, so a is neither a loop nor a coloop
        const int a = s.max();
        delcon.expect(beta_crapo(m) == beta_crapo(m.delete_element(a)) + beta_crapo(m.contract_element(a)),
                      "a = " + std::to_string(a));
        const auto dec = chain_decomposition_check(m);
        decomposition.expect(dec.ok(), dec.problems.empty() ? "chain sets differ" : dec.problems.front());
        if (!l.contains(s.without(a))) {
            const std::string why = s.without(a).str() + " is not a T-flat";
            for (Tally* t : {&maps, &sequence, &nu, &pi}) t->skip(why);
        } else {
            const auto hm = homology_maps(m);
            maps.expect(hm.problems.empty(), hm.problems.empty() ? "" : hm.problems.front());
            maps.expect(hm.epsilon.matches(), "epsilon");
            maps.expect(hm.delta.matches(), "delta");
            maps.expect(hm.delta_chain_map, "delta is not a chain map");
            maps.expect(hm.exact, "not exact");

            const auto d = diagram_check(rep);
            const std::string problem = d.problems.empty() ? "" : d.problems.front();
            sequence.expect(d.problems.empty(), problem);
            sequence.expect(d.nu_formula, "nu(x_B) != x_{B u a}");
            sequence.expect(d.pi_zero_pattern, "pi(x_B) = 0 does not match a in B");
            sequence.expect(d.pi_after_nu_zero && d.nu_injective && d.pi_surjective && d.exact, "not exact");
            nu.expect(d.problems.empty() && d.nu_square.commutes(), problem.empty() ? "nu against delta transpose" : problem);
            pi.expect(d.problems.empty() && d.pi_square.commutes(), problem.empty() ? scales(d) : problem);
        }
    }

    std::vector<Check> out;
    for (const Tally* t : {&circuits, &lattice, &beta, &sign, &bnbc, &homology, &brylawski, &cycles, &basis, &delcon,
                           &decomposition, &maps, &sequence, &nu, &pi})
        out.push_back(t->result());
    return out;
}

}  // namespace mrt

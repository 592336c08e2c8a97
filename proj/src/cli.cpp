#include "mrt/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "mrt/bcc.hpp"
#include "mrt/multspace.hpp"
#include "mrt/verify.hpp"

namespace mrt {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

ElementSet parse_element_set(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') t += c;
    if (t.empty()) throw UsageError("empty set '" + text + "'");
    ElementSet s;
    try {
        if (t.find(',') == std::string::npos) {
            for (char c : t) {
                if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                    throw UsageError("bad element '" + std::string(1, c) + "' in '" + text + "'");
                s.insert(c - '0');
            }
        } else {
            std::istringstream is(t);
            std::string part;
            while (std::getline(is, part, ',')) {
                if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || part.size() > 2)
                    throw UsageError("bad element '" + part + "' in '" + text + "'");
                s.insert(std::stoi(part));
            }
        }
    } catch (const std::out_of_range&) {
        throw UsageError("element out of range in '" + text + "'");
    }
    return s;
}

json set_json(ElementSet s) { return s.elements(); }

std::string rat_string(const Rat& q) { return q.get_str(); }

std::string compact(ElementSet s) {
    const auto e = s.elements();
    if (std::all_of(e.begin(), e.end(), [](int x) { return x < 10; })) {
        std::string out;
        for (int x : e) out += std::to_string(x);
        return out;
    }
    std::string out;
    for (int x : e) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

std::string lattice_dot(const Matroid& m, const TFlatLattice& l, ElementSet a) {
    const auto covers = labeled_covers(m, l, a);
    std::map<int, std::vector<ElementSet>, std::greater<>> by_level;
    std::vector<ElementSet> nodes{a};
    for (const auto& c : covers) {
        nodes.push_back(c.lower);
        nodes.push_back(c.upper);
    }
    std::sort(nodes.begin(), nodes.end(), ElementSet::lex_less);
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (ElementSet x : nodes) by_level[l.level(x)].push_back(x);

    std::ostringstream os;
    os << "graph tflats {\n  node [shape=plaintext];\n";
    for (const auto& [lev, xs] : by_level) {
        os << "  { rank=same;";
        for (ElementSet x : xs) os << " \"" << compact(x) << "\";";
        os << " }  // level " << lev << "\n";
    }
    for (const auto& c : covers) {
        os << "  \"" << compact(c.upper) << "\" -- \"" << compact(c.lower) << "\"";
        if (c.qualified && c.reachable) {
            os << " [label=\"" << c.label << "\"";
            if (!c.on_decreasing) os << ", style=dashed";
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

QMatrix generate_uniform(int r, int n, std::uint64_t seed) {
    if (r < 1 || n < r || n > ElementSet::kMaxElement)
        throw UsageError("gen-uniform needs 1 <= r <= n <= 63, got r=" + std::to_string(r) + " n=" + std::to_string(n));
    // Reduction mod a small range keeps the stream identical across standard
    // libraries, unlike std::uniform_int_distribution.
    std::mt19937_64 rng(seed);
    for (;;) {
        QMatrix phi(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < phi.rows(); ++i)
            for (std::size_t j = 0; j < phi.cols(); ++j) {
                const long p = static_cast<long>(rng() % 11) - 5;
                const long q = static_cast<long>(rng() % 3) + 1;
                phi(i, j) = Rat(p, q);
                phi(i, j).canonicalize();
            }
        const Matroid m = Matroid::from_matrix(phi);
        bool generic = true;
        for_each_k_subset(m.ground(), r, [&](ElementSet x) { generic = generic && m.rank(x) == r; });
        if (generic) return phi;
    }
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"circuits", "tflats", "beta",   "bnbc",
                                                "homology", "basis",  "verify", "gen-uniform"};
    return names;
}

namespace {

json input_json(const InputMatrix& in) {
    json coeffs = json::array(), degrees = json::array();
    for (const auto& row : in.rows) {
        json c = json::array(), d = json::array();
        for (const auto& e : row) {
            c.push_back(rat_string(e.coefficient));
            d.push_back(e.degree ? json(*e.degree) : json(nullptr));
        }
        coeffs.push_back(c);
        degrees.push_back(d);
    }
    return {{"sha256", sha256_hex(in.source)},
            {"rows", in.nrows()},
            {"columns", in.ncols()},
            {"variables", in.variables},
            {"coefficients", coeffs},
            {"degrees", degrees}};
}

// Levels descending, then lexicographic.
std::vector<ElementSet> top_down(const TFlatLattice& l) {
    std::vector<ElementSet> v = l.tflats();
    std::stable_sort(v.begin(), v.end(), [&](ElementSet x, ElementSet y) {
        if (l.level(x) != l.level(y)) return l.level(x) > l.level(y);
        return ElementSet::lex_less(x, y);
    });
    return v;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + "  " : s + std::string(w - s.size(), ' '); }

// The table cell: a lone basis is written bare, several are braced.
std::string bnbc_cell(const std::vector<BnbcElement>& v) {
    if (v.size() == 1) return v[0].b.str();
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].b.str();
    return out + "}";
}

json bnbc_json(const BnbcElement& e) {
    json chain = json::array();
    for (ElementSet x : e.chain) chain.push_back(set_json(x));
    return {{"b", set_json(e.b)}, {"labels", e.labels}, {"chain", chain}, {"chain_count", e.chain_count}};
}

std::string labels_str(const std::vector<int>& labels) {
    std::string out = "(";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
    return out + ")";
}

struct Context {
    const InputMatrix& input;
    Representation rep;
    Matroid m;
    TFlatLattice l;
    explicit Context(const InputMatrix& in)
        : input(in), rep(Representation::from_matrix(in.coefficients())), m(Matroid::from_representation(rep)), l(m) {}

    // The --tflat argument, or the ground set.
    ElementSet tflat(const CommandOptions& o) const {
        const ElementSet a = o.tflat.value_or(m.ground());
        if (!a.subset_of(m.ground())) throw UsageError(a.str() + " is not a subset of the ground set " + m.ground().str());
        if (!l.contains(a))
            throw UsageError(a.str() + " is not a T-flat" + (o.tflat ? "" : "; pass --tflat with one of the T-flats"));
        return a;
    }
};

CommandOutput cmd_circuits(const Context& c) {
    CommandOutput out;
    json list = json::array();
    std::ostringstream os;
    for (ElementSet x : c.m.circuits()) {
        list.push_back(set_json(x));
        os << x.str() << "\n";
    }
    out.report["results"] = {{"circuits", list}, {"count", c.m.circuits().size()}};
    out.text = os.str();
    return out;
}

CommandOutput cmd_tflats(const Context& c, const CommandOptions& o) {
    CommandOutput out;
    std::ostringstream os;
    json nodes = json::array();
    os << pad("T-flat", 16) << pad("level", 7) << "connected\n";
    for (ElementSet a : top_down(c.l)) {
        nodes.push_back({{"set", set_json(a)}, {"level", c.l.level(a)}, {"connected", c.l.connected(a)}});
        os << pad(a.str(), 16) << pad(std::to_string(c.l.level(a)), 7) << (c.l.connected(a) ? "yes" : "no") << "\n";
    }
    json covers = json::array();
    os << "covers:\n";
    for (const auto& [lo, up] : c.l.covers()) {
        covers.push_back({set_json(lo), set_json(up)});
        os << "  " << lo.str() << " < " << up.str() << "\n";
    }
    out.report["results"] = {{"count", c.l.size()}, {"tflats", nodes}, {"covers", covers}};
    if (!c.l.empty()) {
        const ElementSet a = c.tflat(o);
        json edges = json::array();
        for (const auto& e : labeled_covers(c.m, c.l, a))
            edges.push_back({{"lower", set_json(e.lower)},
                             {"upper", set_json(e.upper)},
                             {"qualified", e.qualified},
                             {"label", e.qualified ? json(e.label) : json(nullptr)},
                             {"reachable", e.reachable},
                             {"on_decreasing_chain", e.on_decreasing}});
        out.report["results"]["labeled"] = {{"tflat", set_json(a)}, {"edges", edges}};
        out.dot = lattice_dot(c.m, c.l, a);
    }
    out.text = os.str();
    return out;
}

CommandOutput cmd_beta(const Context& c, const CommandOptions& o) {
    const ElementSet a = c.tflat(o);
    const Matroid dual = c.m.restrict(a).dual();
    const long long dim = dim_tspace(c.m, c.l, a);
    const long long crapo = beta_crapo(dual);
    const long long delcon = beta_delcon(dual);
    const long long count = static_cast<long long>(bnbc_via_chains(c.m, c.l, a).size());
    const bool agree = dim == crapo && crapo == delcon && delcon == count;

    CommandOutput out;
    out.report["results"] = {{"tflat", set_json(a)},
                             {"mobius_dimension", dim},
                             {"crapo", crapo},
                             {"deletion_contraction", delcon},
                             {"bnbc_count", count},
                             {"agree", agree}};
    out.report["passed"] = agree;
    std::ostringstream os;
    os << "T-flat " << a.str() << "\n"
       << pad("mobius dimension", 22) << dim << "\n"
       << pad("crapo", 22) << crapo << "\n"
       << pad("deletion-contraction", 22) << delcon << "\n"
       << pad("beta-nbc count", 22) << count << "\n"
       << pad("agree", 22) << (agree ? "yes" : "no") << "\n";
    out.text = os.str();
    out.exit_code = agree ? 0 : 1;
    return out;
}

CommandOutput cmd_bnbc(const Context& c, const CommandOptions& o) {
    std::vector<ElementSet> rows;
    if (o.tflat) {
        rows.push_back(c.tflat(o));
    } else {
        for (ElementSet a : top_down(c.l))
            if (c.l.level(a) > 0) rows.push_back(a);
    }
    CommandOutput out;
    json table = json::array();
    std::ostringstream os;
    std::size_t width = 8;
    for (ElementSet a : rows) width = std::max(width, a.str().size() + 2);
    os << pad("T-flat", width) << "beta-nbc basis\n";
    for (ElementSet a : rows) {
        const auto v = bnbc_via_chains(c.m, c.l, a);
        json bases = json::array();
        for (const auto& e : v) bases.push_back(bnbc_json(e));
        table.push_back({{"tflat", set_json(a)}, {"level", c.l.level(a)}, {"bnbc", bases}});
        os << pad(a.str(), width) << bnbc_cell(v) << "\n";
    }
    out.report["results"] = {{"table", table}};
    out.text = os.str();
    return out;
}

CommandOutput cmd_homology(const Context& c, const CommandOptions& o) {
    const ElementSet a = c.tflat(o);
    const SimplicialComplex k = reduced_bc_complex(c.m.restrict(a).dual());
    CommandOutput out;
    std::ostringstream os;
    os << "reduced homology over Z of the reduced broken circuit complex of (M|" << a.str() << ")*\n";
    json groups = json::array();
    if (k.is_void()) os << "void complex\n";
    for (const auto& g : reduced_homology(k)) {
        json torsion = json::array();
        std::string desc;
        if (g.betti) desc = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
        for (const Int& t : g.torsion) {
            torsion.push_back(t.get_str());
            desc += (desc.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
        }
        groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}});
        os << "H_" << g.degree << " = " << (desc.empty() ? "0" : desc) << "\n";
    }
    out.report["results"] = {{"tflat", set_json(a)}, {"void", k.is_void()}, {"groups", groups}};
    out.text = os.str();
    return out;
}

// A chain linear form as +-v_j when it is a column of phi, else expanded.
// Prefers p = max(upper \ lower), then the largest matching column.
std::string form_name(const Representation& rep, const VCoords& vc, ElementSet lower, ElementSet upper) {
    const QVector form = chain_linear_form(rep, vc, lower, upper);
    QVector neg = form;
    for (auto& x : neg) x = -x;
    std::vector<int> order{(upper - lower).max()};
    const auto g = rep.ground().elements();
    order.insert(order.end(), g.rbegin(), g.rend());
    for (int j : order) {
        const QVector col = vc.coords(rep.column(j));
        if (col == form) return "v" + std::to_string(j);
        if (col == neg) return "-v" + std::to_string(j);
    }
    return "(" + SymPoly::linear(form).str(vc.names()) + ")";
}

CommandOutput cmd_basis(const Context& c, const CommandOptions& o) {
    const ElementSet a = c.tflat(o);
    const VCoords vc = VCoords::pivot(c.rep);
    const auto mb = multiplicity_basis(c.rep, vc, a);
    CommandOutput out;
    std::ostringstream os;
    os << "T-flat " << a.str() << ", coordinates";
    for (const auto& n : vc.names()) os << " " << n;
    os << " (pivot basis " << vc.pivot_basis().str() << ")\n";
    json elems = json::array();
    for (const auto& e : mb.elements) {
        std::vector<std::string> factors;
        const auto& ch = e.index.chain;
        for (std::size_t i = ch.size(); i-- > 1;)
            factors.push_back(form_name(c.rep, vc, ch[i], ch[i - 1]));
        std::string product;
        for (const auto& f : factors) product += (product.empty() ? "" : "*") + f;
        if (product.empty()) product = "1";
        json terms = json::array();
        for (const auto& [exp, coeff] : e.xb.terms()) terms.push_back({exp, rat_string(coeff)});
        elems.push_back({{"b", set_json(e.index.b)},
                         {"labels", e.index.labels},
                         {"e_label", set_json(e.e_label)},
                         {"v_label", set_json(e.v_label)},
                         {"factors", factors},
                         {"terms", terms},
                         {"text", e.xb.str(vc.names())}});
        os << "x_" << compact(e.index.b) << " = " << product;
        if (product != e.xb.str(vc.names())) os << " = " << e.xb.str(vc.names());
        os << "    labels " << labels_str(e.index.labels) << "\n";
    }
    os << "independent over Q and Z: " << (mb.independent() ? "yes" : "no") << "\n";
    out.report["results"] = {{"tflat", set_json(a)},
                             {"coordinates", vc.names()},
                             {"pivot_basis", set_json(vc.pivot_basis())},
                             {"elements", elems},
                             {"rank_q", mb.rank_q},
                             {"rank_z", mb.rank_z},
                             {"independent", mb.independent()}};
    out.text = os.str();
    return out;
}

CommandOutput cmd_verify(const Context& c) {
    const auto checks = verify_suite(c.rep);
    CommandOutput out;
    json list = json::array();
    std::ostringstream os;
    std::size_t failed = 0, skipped = 0;
    for (const auto& ch : checks) {
        list.push_back({{"name", ch.name}, {"status", to_string(ch.status)}, {"detail", ch.detail}});
        os << to_string(ch.status) << "  " << ch.name;
        if (!ch.detail.empty()) os << "  [" << ch.detail << "]";
        os << "\n";
        failed += ch.status == CheckStatus::fail;
        skipped += ch.status == CheckStatus::skip;
    }
    os << checks.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
    const bool ok = all_passed(checks);
    out.report["results"] = {{"checks", list}};
    out.report["passed"] = ok;
    out.text = os.str();
    out.exit_code = ok ? 0 : 1;
    return out;
}

CommandOutput cmd_gen_uniform(const CommandOptions& o) {
    const QMatrix phi = generate_uniform(o.r, o.n, o.seed);
    CommandOutput out;
    json rows = json::array();
    std::ostringstream os;
    os << "# uniform r=" << o.r << " n=" << o.n << " seed=" << o.seed << "\n";
    for (std::size_t i = 0; i < phi.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < phi.cols(); ++j) {
            row.push_back(rat_string(phi(i, j)));
            os << (j ? " " : "") << rat_string(phi(i, j));
        }
        rows.push_back(row);
        os << "\n";
    }
    out.report["results"] = {{"r", o.r}, {"n", o.n}, {"seed", o.seed}, {"rows", rows}};
    out.text = os.str();
    return out;
}

}  // namespace

CommandOutput run_command(const std::string& command, const InputMatrix* input, const CommandOptions& options) {
    if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
        throw UsageError("unknown command '" + command + "'");
    CommandOutput out;
    if (command == "gen-uniform") {
        out = cmd_gen_uniform(options);
        out.report["input"] = nullptr;
    } else {
        if (!input) throw UsageError(command + " needs --input");
        if (input->ncols() > static_cast<std::size_t>(ElementSet::kMaxElement))
            throw UsageError("at most 63 columns are supported");
        const Context c(*input);
        if (command == "circuits") out = cmd_circuits(c);
        else if (command == "tflats") out = cmd_tflats(c, options);
        else if (command == "beta") out = cmd_beta(c, options);
        else if (command == "bnbc") out = cmd_bnbc(c, options);
        else if (command == "homology") out = cmd_homology(c, options);
        else if (command == "basis") out = cmd_basis(c, options);
        else out = cmd_verify(c);
        out.report["input"] = input_json(*input);
    }
    out.report["schema"] = kReportSchema;
    out.report["command"] = command;
    if (!out.report.contains("passed")) out.report["passed"] = out.exit_code == 0;
    return out;
}

}  // namespace mrt

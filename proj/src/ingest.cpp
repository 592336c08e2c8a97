#include "mrt/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mrt {

namespace {

struct Term {
    Rat coefficient{1};
    std::map<std::string, int> exponents;
};

// Thrown inside the term parser and rethrown with a matrix position.
struct TermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class TermParser {
  public:
    TermParser(const std::string& text, const std::vector<std::string>& declared) : declared_(declared) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    Term parse() {
        if (s_.empty()) throw TermError("empty entry");
        Term t;
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = get() == '-';
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coefficient = number();
            any = true;
            if (peek() == '*') {
                get();
                if (at_end()) fail("expected a variable after '*'");
            }
        }
        while (!at_end()) {
            if (any && peek() == '*' && !t.exponents.empty()) {
                get();
                if (at_end()) fail("expected a variable after '*'");
            }
            const std::string name = variable();
            int e = 1;
            if (peek() == '^') {
                get();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent after '^'");
                e = std::stoi(digits());
            }
            t.exponents[name] += e;
            any = true;
        }
        if (!any) fail("expected a number or a variable");
        if (negative) t.coefficient = -t.coefficient;
        return t;
    }

  private:
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw TermError(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        return d;
    }

    Rat number() {
        Int p(digits());
        Int q(1);
        if (peek() == '/') {
            get();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator after '/'");
            q = Int(digits());
            if (q == 0) fail("zero denominator");
        }
        Rat r(p, q);
        r.canonicalize();
        return r;
    }

    std::string variable() {
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail(std::string("unexpected character '") + peek() + "'");
        if (declared_.empty()) {
            std::string name(1, get());
            while (std::isdigit(static_cast<unsigned char>(peek()))) name += get();
            return name;
        }
        // longest declared name matching here
        const std::string* best = nullptr;
        for (const auto& v : declared_)
            if (s_.compare(pos_, v.size(), v) == 0 && (!best || v.size() > best->size())) best = &v;
        if (!best) fail("undeclared variable");
        pos_ += best->size();
        return *best;
    }

    std::string s_;
    std::size_t pos_ = 0;
    const std::vector<std::string>& declared_;
};

Term parse_term(const std::string& text, const std::vector<std::string>& declared) {
    return TermParser(text, declared).parse();
}

Entry make_entry(const std::string& text, const Term& t, const std::vector<std::string>& variables) {
    Entry e{text, t.coefficient, std::nullopt};
    if (t.coefficient != 0) {
        std::vector<int> d(variables.size(), 0);
        for (const auto& [name, exp] : t.exponents) {
            const auto it = std::find(variables.begin(), variables.end(), name);
            d[static_cast<std::size_t>(it - variables.begin())] = exp;
        }
        e.degree = std::move(d);
    }
    return e;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

std::vector<std::string> declare(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) throw ParseError(0, 0, "invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw ParseError(0, 0, "variable '" + n + "' declared twice");
    }
    return names;
}

// Parses every cell, infers variables when none were declared, and checks
// that the rows are rectangular.
InputMatrix assemble(std::vector<std::string> variables, const std::vector<std::vector<std::string>>& cells,
                     std::string source) {
    if (cells.empty()) throw ParseError(0, 0, "no matrix rows");
    const std::size_t width = cells.front().size();
    if (width == 0) throw ParseError(1, 0, "row 1 is empty");
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() != width)
            throw ParseError(i + 1, 0,
                             "row " + std::to_string(i + 1) + " has " + std::to_string(cells[i].size()) +
                                 " entries, expected " + std::to_string(width));

    std::vector<std::vector<Term>> terms(cells.size());
    std::set<std::string> inferred;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) {
            try {
                terms[i].push_back(parse_term(cells[i][j], variables));
            } catch (const TermError& e) {
                throw ParseError(i + 1, j + 1, e.what());
            }
            for (const auto& [name, exp] : terms[i].back().exponents) inferred.insert(name);
        }
    if (variables.empty()) variables.assign(inferred.begin(), inferred.end());

    InputMatrix m;
    m.variables = variables;
    m.source = std::move(source);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        m.rows.emplace_back();
        for (std::size_t j = 0; j < width; ++j) m.rows[i].push_back(make_entry(cells[i][j], terms[i][j], variables));
    }
    return m;
}

InputMatrix ingest_plain(const std::string& text) {
    std::vector<std::string> variables;
    std::vector<std::vector<std::string>> cells;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto words = split_ws(line);
        if (words.empty()) continue;
        if (words.front().rfind("variables:", 0) == 0) {
            if (!cells.empty()) throw ParseError(0, 0, "variables line after the first matrix row");
            if (!variables.empty()) throw ParseError(0, 0, "second variables line");
            std::string rest = line.substr(line.find("variables:") + 10);
            std::replace(rest.begin(), rest.end(), ',', ' ');
            variables = declare(split_ws(rest));
            if (variables.empty()) throw ParseError(0, 0, "empty variables line");
            continue;
        }
        cells.push_back(std::move(words));
    }
    return assemble(std::move(variables), cells, text);
}

InputMatrix ingest_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, 0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError(0, 0, "JSON input must be an object");
    std::vector<std::string> variables;
    if (doc.contains("variables")) {
        if (!doc["variables"].is_array()) throw ParseError(0, 0, "\"variables\" must be an array of strings");
        for (const auto& v : doc["variables"]) {
            if (!v.is_string()) throw ParseError(0, 0, "\"variables\" must be an array of strings");
            variables.push_back(v.get<std::string>());
        }
        variables = declare(variables);
    }
    if (!doc.contains("rows") || !doc["rows"].is_array()) throw ParseError(0, 0, "missing \"rows\" array");
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        const auto& row = doc["rows"][i];
        if (!row.is_array()) throw ParseError(i + 1, 0, "row " + std::to_string(i + 1) + " is not an array");
        cells.emplace_back();
        for (std::size_t j = 0; j < row.size(); ++j) {
            const auto& x = row[j];
            if (x.is_string())
                cells.back().push_back(x.get<std::string>());
            else if (x.is_number_integer())
                cells.back().push_back(x.dump());
            else
                throw ParseError(i + 1, j + 1, "entries must be strings or integers");
        }
    }
    return assemble(std::move(variables), cells, text);
}

}  // namespace

ParseError::ParseError(std::size_t row, std::size_t column, const std::string& what)
    : std::runtime_error(column ? "row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what
                                : what),
      row_(row),
      column_(column) {}

QMatrix InputMatrix::coefficients() const {
    QMatrix m(nrows(), ncols());
    for (std::size_t i = 0; i < nrows(); ++i)
        for (std::size_t j = 0; j < ncols(); ++j) m(i, j) = rows[i][j].coefficient;
    return m;
}

Entry parse_entry(const std::string& text, const std::vector<std::string>& variables) {
    Term t;
    try {
        t = parse_term(text, variables);
    } catch (const TermError& e) {
        throw ParseError(0, 0, e.what());
    }
    if (!variables.empty()) return make_entry(text, t, variables);
    std::vector<std::string> names;
    for (const auto& [name, exp] : t.exponents) names.push_back(name);
    return make_entry(text, t, names);
}

InputMatrix ingest_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return ingest_json(text);
    return ingest_plain(text);
}

InputMatrix ingest_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError(0, 0, "cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return ingest_text(text);
}

}  // namespace mrt

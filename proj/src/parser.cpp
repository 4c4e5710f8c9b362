#include "halg/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace halg {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
    const std::string& s;
    std::uint32_t line;
    std::size_t pos = 0;

    std::uint32_t col() const { return static_cast<std::uint32_t>(pos) + 1; }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size() || s[pos] == '#';
    }
    char peek() { return s[pos]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, col(), msg);
    }
    std::string word() {
        skip_ws();
        if (done() || !name_start(s[pos])) fail("expected a word");
        std::size_t start = pos;
        while (pos < s.size() && name_char(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > 18) throw ParseError(line, static_cast<std::uint32_t>(start) + 1,
                                               "integer literal too large");
        return std::stoll(s.substr(start, pos - start));
    }
};

struct RelParser {
    Cursor& cur;
    Flavor flavor;
    const std::map<std::string, std::uint32_t>& vars;
    const PrimeField& field;

    // one product term, already sign-adjusted; returns expanded words
    // with a common coefficient
    std::pair<FieldElement, std::vector<std::vector<std::uint32_t>>> term() {
        FieldElement coeff = field.one();
        std::vector<std::vector<std::uint32_t>> words{{}};
        bool first = true;
        while (true) {
            cur.skip_ws();
            if (cur.done()) {
                if (first) cur.fail("expected a term");
                break;
            }
            char c = cur.peek();
            if (!first) {
                if (c == '+' || c == '-') break;
                if (c != '*') cur.fail("malformed token (expected '*', '+' or '-')");
                ++cur.pos;
                cur.skip_ws();
                if (cur.done()) cur.fail("dangling '*'");
                c = cur.peek();
            }
            first = false;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::uint32_t col = cur.col();
                std::int64_t num = cur.integer();
                FieldElement f = field.from_int(num);
                cur.skip_ws();
                if (!cur.done() && cur.peek() == '/') {
                    ++cur.pos;
                    std::int64_t den = cur.integer();
                    FieldElement fd = field.from_int(den);
                    if (fd.value == 0)
                        throw ParseError(cur.line, col,
                                         "denominator divisible by the prime");
                    f = field.div(f, fd);
                }
                coeff = field.mul(coeff, f);
            } else if (c == '[') {
                std::uint32_t col = cur.col();
                if (flavor != Flavor::lie)
                    cur.fail("bracket token requires lie flavor");
                ++cur.pos;
                std::uint32_t a = generator(col);
                cur.skip_ws();
                if (cur.done() || cur.peek() != ',') cur.fail("expected ','");
                ++cur.pos;
                std::uint32_t b = generator(cur.col());
                cur.skip_ws();
                if (cur.done() || cur.peek() != ']') cur.fail("expected ']'");
                ++cur.pos;
                std::vector<std::vector<std::uint32_t>> expanded;
                expanded.reserve(words.size() * 2);
                for (const auto& w : words) {
                    auto w1 = w;
                    w1.push_back(a);
                    w1.push_back(b);
                    expanded.push_back(std::move(w1));
                    auto w2 = w;
                    w2.push_back(b);
                    w2.push_back(a);
                    expanded.push_back(std::move(w2));
                }
                words = std::move(expanded);
            } else if (name_start(c)) {
                std::uint32_t g = generator(cur.col());
                for (auto& w : words) w.push_back(g);
            } else {
                cur.fail("malformed token");
            }
        }
        return {coeff, std::move(words)};
    }

    std::uint32_t generator(std::uint32_t col) {
        std::string name = cur.word();
        auto it = vars.find(name);
        if (it == vars.end())
            throw ParseError(cur.line, col, "unknown generator '" + name + "'");
        return it->second;
    }

    Form parse(std::uint32_t n) {
        std::vector<std::pair<Monomial, FieldElement>> terms;
        std::optional<std::uint32_t> degree;
        std::uint32_t rel_col = cur.col();
        bool first = true;
        while (!cur.done()) {
            FieldElement sign = field.one();
            cur.skip_ws();
            char c = cur.peek();
            if (c == '+' || c == '-') {
                if (c == '-') sign = field.neg(sign);
                ++cur.pos;
            } else if (!first) {
                cur.fail("expected '+' or '-'");
            }
            std::uint32_t term_col = cur.col();
            auto [coeff, words] = term();
            coeff = field.mul(coeff, sign);
            std::uint32_t d = static_cast<std::uint32_t>(words.front().size());
            if (degree && d != *degree)
                throw ParseError(cur.line, term_col, "non-homogeneous relation");
            degree = d;
            for (auto& w : words) {
                Monomial m = Monomial::word(w);
                if (flavor == Flavor::commutative) {
                    std::vector<std::uint32_t> exps(n, 0);
                    for (std::uint32_t l : w) ++exps[l];
                    m = Monomial::exponents(std::move(exps));
                }
                terms.emplace_back(std::move(m), coeff);
            }
            first = false;
        }
        if (!degree) throw ParseError(cur.line, rel_col, "empty relation");
        if (*degree < 2)
            throw ParseError(cur.line, rel_col, "relations must have degree >= 2");
        Flavor storage = flavor == Flavor::commutative ? Flavor::commutative
                                                       : Flavor::noncommutative;
        Form f = Form::make(storage, n, *degree, std::move(terms), field);
        if (f.terms.empty())
            throw ParseError(cur.line, rel_col, "relation vanishes modulo p");
        if (flavor == Flavor::lie) {
            if (f.degree != 2)
                throw ParseError(cur.line, rel_col, "not a Lie-type relation");
            for (const auto& [m, c] : f.terms) {
                if (m.data[0] != m.data[1] &&
                    f.coeff(Monomial::word({m.data[1], m.data[0]})) != c)
                    throw ParseError(cur.line, rel_col, "not a Lie-type relation");
            }
        }
        return f;
    }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    std::optional<Flavor> flavor;
    std::optional<PrimeField> field;
    bool prime_declared = false;
    std::vector<std::string> names;
    std::map<std::string, std::uint32_t> vars;
    std::vector<Form> relations;

    std::istringstream in(text);
    std::string raw;
    std::uint32_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        Cursor cur{raw, lineno};
        if (cur.done()) continue;
        std::uint32_t kw_col = cur.col();
        std::string kw = cur.word();
        if (kw == "flavor") {
            if (flavor) cur.fail("duplicate flavor line");
            std::uint32_t col = cur.col();
            std::string fl = cur.word();
            try {
                flavor = flavor_from_name(fl);
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, col, e.what());
            }
        } else if (kw == "prime") {
            if (!relations.empty())
                throw ParseError(lineno, kw_col, "prime must precede relations");
            if (prime_declared) cur.fail("duplicate prime line");
            prime_declared = true;
            std::uint32_t col = cur.col();
            std::int64_t p = cur.integer();
            try {
                field = PrimeField(static_cast<std::uint32_t>(
                    p < 0 || p > 2147483647 ? 0 : p));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, col, e.what());
            }
        } else if (kw == "vars") {
            if (!names.empty()) cur.fail("duplicate vars line");
            if (!relations.empty())
                throw ParseError(lineno, kw_col, "vars must precede relations");
            while (true) {
                std::uint32_t col = cur.col();
                std::string name = cur.word();
                if (vars.count(name))
                    throw ParseError(lineno, col,
                                     "duplicate generator '" + name + "'");
                vars[name] = static_cast<std::uint32_t>(names.size());
                names.push_back(name);
                cur.skip_ws();
                if (cur.done()) break;
                if (cur.peek() != ',') cur.fail("expected ','");
                ++cur.pos;
            }
        } else if (kw == "rel") {
            if (!flavor)
                throw ParseError(lineno, kw_col, "flavor must precede relations");
            if (names.empty())
                throw ParseError(lineno, kw_col, "vars must precede relations");
            if (!field) field = PrimeField();
            RelParser rp{cur, *flavor, vars, *field};
            relations.push_back(rp.parse(static_cast<std::uint32_t>(names.size())));
        } else {
            throw ParseError(lineno, kw_col, "unknown directive '" + kw + "'");
        }
        if (!cur.done()) cur.fail("trailing input");
    }
    if (!flavor) throw ParseError(lineno, 1, "missing flavor line");
    if (names.empty()) throw ParseError(lineno, 1, "missing vars line");
    if (!field) field = PrimeField();
    return Presentation(*flavor, names, *field, std::move(relations));
}

namespace {

std::string coeff_str(const PrimeField& F, FieldElement v, bool leading) {
    std::int64_t sv = v.value;
    if (sv > (F.modulus() - 1) / 2) sv -= F.modulus();
    std::string out;
    if (sv < 0)
        out = leading ? "-" : "- ";
    else if (!leading)
        out = "+ ";
    std::int64_t mag = sv < 0 ? -sv : sv;
    if (mag != 1) out += std::to_string(mag) + "*";
    return out;
}

std::string monomial_str(const Presentation& p, const Monomial& m) {
    std::string out;
    if (p.flavor == Flavor::commutative) {
        for (std::uint32_t i = 0; i < p.n; ++i)
            for (std::uint32_t k = 0; k < m.data[i]; ++k) {
                if (!out.empty()) out += "*";
                out += p.names[i];
            }
    } else {
        for (std::uint32_t l : m.data) {
            if (!out.empty()) out += "*";
            out += p.names[l];
        }
    }
    return out;
}

}  // namespace

std::string serialize_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "flavor " << flavor_name(p.flavor) << "\n";
    out << "prime " << p.field.modulus() << "\n";
    out << "vars ";
    for (std::uint32_t i = 0; i < p.n; ++i) {
        if (i) out << ", ";
        out << p.names[i];
    }
    out << "\n";
    for (const auto& f : p.relations) {
        out << "rel ";
        bool leading = true;
        for (std::size_t k = 0; k < f.terms.size(); ++k) {
            const auto& [m, c] = f.terms[k];
            if (p.flavor == Flavor::lie && m.data[0] > m.data[1])
                continue;  // mirror of an already-printed bracket
            if (!leading) out << " ";
            out << coeff_str(p.field, c, leading);
            if (p.flavor == Flavor::lie && m.data[0] != m.data[1])
                out << "[" << p.names[m.data[0]] << "," << p.names[m.data[1]]
                    << "]";
            else
                out << monomial_str(p, m);
            leading = false;
        }
        out << "\n";
    }
    return out.str();
}

bool operator==(const Presentation& a, const Presentation& b) {
    return a.flavor == b.flavor && a.n == b.n && a.names == b.names &&
           a.field == b.field && a.relations == b.relations;
}

}  // namespace halg

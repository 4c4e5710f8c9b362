#include "halg/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace halg {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::commutative: return "commutative";
        case Flavor::noncommutative: return "noncommutative";
        case Flavor::lie: return "lie";
    }
    return "?";
}

Flavor flavor_from_name(const std::string& s) {
    if (s == "commutative") return Flavor::commutative;
    if (s == "noncommutative") return Flavor::noncommutative;
    if (s == "lie") return Flavor::lie;
    throw std::invalid_argument("unknown flavor: " + s);
}

Monomial Monomial::word(std::vector<std::uint32_t> letters) {
    return {std::move(letters)};
}

Monomial Monomial::exponents(std::vector<std::uint32_t> exps) {
    return {std::move(exps)};
}

std::uint32_t monomial_degree(Flavor f, const Monomial& m) {
    if (f == Flavor::commutative)
        return std::accumulate(m.data.begin(), m.data.end(), 0u);
    return static_cast<std::uint32_t>(m.data.size());
}

bool monomial_less(Flavor f, const Monomial& a, const Monomial& b) {
    std::uint32_t da = monomial_degree(f, a), db = monomial_degree(f, b);
    if (da != db) return da < db;
    if (f == Flavor::commutative)
        return std::lexicographical_compare(b.data.begin(), b.data.end(),
                                            a.data.begin(), a.data.end());
    return std::lexicographical_compare(a.data.begin(), a.data.end(),
                                        b.data.begin(), b.data.end());
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (base != 0 && r > (std::uint64_t(1) << 62) / base)
            throw std::overflow_error("monomial count overflows");
        r *= base;
    }
    return r;
}

std::uint64_t binom_u64(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        if (r > ((std::uint64_t(1) << 62) / (a - b + i)))
            throw std::overflow_error("monomial count overflows");
        r = r * (a - b + i) / i;
    }
    return r;
}

void check_word(std::uint32_t n, const Monomial& m) {
    for (std::uint32_t l : m.data)
        if (l >= n) throw std::invalid_argument("generator index out of range");
}

void check_exponents(std::uint32_t n, const Monomial& m) {
    if (m.data.size() != n)
        throw std::invalid_argument("exponent vector has wrong length");
}

}  // namespace

std::uint64_t monomial_count(Flavor f, std::uint32_t n, std::uint32_t d) {
    if (f == Flavor::commutative) return binom_u64(std::uint64_t(n) + d - 1, d);
    return checked_pow(n, d);
}

std::uint64_t monomial_index(Flavor f, std::uint32_t n, const Monomial& m) {
    if (f == Flavor::commutative) {
        check_exponents(n, m);
        std::uint32_t rem = monomial_degree(f, m);
        std::uint64_t idx = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            // monomials whose i-th exponent exceeds ours, prefix equal
            for (std::uint32_t v = m.data[i] + 1; v <= rem; ++v) {
                std::uint32_t vars_left = n - i - 1;
                std::uint32_t deg_left = rem - v;
                if (vars_left == 0) {
                    if (deg_left == 0) ++idx;
                } else {
                    idx += binom_u64(std::uint64_t(vars_left) + deg_left - 1,
                                     deg_left);
                }
            }
            rem -= m.data[i];
        }
        return idx;
    }
    check_word(n, m);
    std::uint64_t idx = 0;
    for (std::uint32_t l : m.data) idx = idx * n + l;
    return idx;
}

std::vector<Monomial> enumerate_monomials(Flavor f, std::uint32_t n,
                                          std::uint32_t d) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::uint64_t count = monomial_count(f, n, d);
    if (count > (std::uint64_t(1) << 24))
        throw std::invalid_argument("degree too large to enumerate");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(count));
    if (f == Flavor::commutative) {
        std::vector<std::uint32_t> exps(n, 0);
        auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t rem) -> void {
            if (i + 1 == n) {
                exps[i] = rem;
                out.push_back(Monomial::exponents(exps));
                return;
            }
            for (std::uint32_t v = rem + 1; v-- > 0;) {
                exps[i] = v;
                self(self, i + 1, rem - v);
            }
            exps[i] = 0;
        };
        rec(rec, 0, d);
    } else {
        std::vector<std::uint32_t> word(d, 0);
        for (std::uint64_t k = 0; k < count; ++k) {
            out.push_back(Monomial::word(word));
            for (std::uint32_t pos = d; pos-- > 0;) {
                if (++word[pos] < n) break;
                word[pos] = 0;
            }
        }
    }
    return out;
}

Monomial monomial_mul(Flavor f, const Monomial& a, const Monomial& b) {
    if (f == Flavor::commutative) {
        if (a.data.size() != b.data.size())
            throw std::invalid_argument("exponent vectors of different length");
        std::vector<std::uint32_t> e(a.data);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.data[i];
        return Monomial::exponents(std::move(e));
    }
    std::vector<std::uint32_t> w(a.data);
    w.insert(w.end(), b.data.begin(), b.data.end());
    return Monomial::word(std::move(w));
}

Form Form::make(Flavor f, std::uint32_t n, std::uint32_t degree,
                std::vector<std::pair<Monomial, FieldElement>> terms,
                const PrimeField& field) {
    for (auto& [m, c] : terms) {
        if (f == Flavor::commutative)
            check_exponents(n, m);
        else
            check_word(n, m);
        if (monomial_degree(f, m) != degree)
            throw std::invalid_argument("form is not homogeneous");
        if (c.value >= field.modulus())
            throw std::invalid_argument("coefficient not reduced mod p");
    }
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return monomial_less(f, a.first, b.first);
    });
    std::vector<std::pair<Monomial, FieldElement>> merged;
    for (auto& [m, c] : terms) {
        if (!merged.empty() && merged.back().first == m)
            merged.back().second = field.add(merged.back().second, c);
        else
            merged.emplace_back(std::move(m), c);
    }
    std::erase_if(merged, [](const auto& t) { return t.second.value == 0; });
    return Form{degree, std::move(merged)};
}

FieldElement Form::coeff(const Monomial& m) const {
    for (const auto& [mono, c] : terms)
        if (mono == m) return c;
    return {0};
}

namespace {

void validate_lie_form(const Form& f) {
    if (f.degree != 2) throw std::invalid_argument("not a Lie-type relation");
    for (const auto& [m, c] : f.terms) {
        std::uint32_t j = m.data[0], l = m.data[1];
        if (j != l) {
            // must pair with the mirrored word at the same coefficient
            if (f.coeff(Monomial::word({l, j})) != c)
                throw std::invalid_argument("not a Lie-type relation");
        }
    }
}

}  // namespace

Presentation::Presentation(Flavor flavor_, std::vector<std::string> names_,
                           PrimeField field_, std::vector<Form> relations_)
    : flavor(flavor_),
      n(static_cast<std::uint32_t>(names_.size())),
      names(std::move(names_)),
      field(field_),
      relations(std::move(relations_)) {
    if (n < 1) throw std::invalid_argument("presentation needs generators");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        throw std::invalid_argument("duplicate generator names");
    Flavor storage = flavor == Flavor::commutative ? Flavor::commutative
                                                   : Flavor::noncommutative;
    for (auto& f : relations) {
        if (f.degree < 2)
            throw std::invalid_argument("relations must have degree >= 2");
        // re-canonicalize under this presentation's flavor and width
        f = Form::make(storage, n, f.degree, f.terms, field);
        if (flavor == Flavor::lie) validate_lie_form(f);
    }
}

std::uint32_t Presentation::max_relation_degree() const {
    std::uint32_t d = 0;
    for (const auto& f : relations) d = std::max(d, f.degree);
    return d;
}

Presentation expand_lie(const Presentation& p) {
    if (p.flavor != Flavor::lie)
        throw std::invalid_argument("expand_lie requires a lie-flavor presentation");
    for (const auto& f : p.relations) validate_lie_form(f);
    return Presentation(Flavor::noncommutative, p.names, p.field, p.relations);
}

AlgebraType type_of_presentation(const Presentation& p) {
    std::vector<std::uint32_t> degs;
    degs.reserve(p.relations.size());
    for (const auto& f : p.relations) degs.push_back(f.degree);
    return AlgebraType(p.n, std::move(degs));
}

}  // namespace halg

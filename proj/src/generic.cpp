#include "halg/generic.hpp"

#include <stdexcept>

#include "halg/hilbert.hpp"
#include "halg/parser.hpp"

namespace halg {

namespace {

/// splitmix64 with rejection sampling: uniform on [0, p) and
/// platform-independent, unlike the std distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    FieldElement uniform(const PrimeField& F) {
        std::uint64_t p = F.modulus();
        std::uint64_t rem = (UINT64_MAX % p + 1) % p;  // 2^64 mod p
        std::uint64_t limit = UINT64_MAX - rem;
        std::uint64_t z = next();
        while (z > limit) z = next();
        return {static_cast<std::uint32_t>(z % p)};
    }

  private:
    std::uint64_t state_;
};

std::vector<std::string> numbered_names(const std::string& stem,
                                        std::uint32_t from, std::uint32_t to) {
    std::vector<std::string> out;
    for (std::uint32_t i = from; i <= to; ++i)
        out.push_back(stem + std::to_string(i));
    return out;
}

}  // namespace

Presentation sample_presentation(Flavor flavor, const AlgebraType& t,
                                 const PrimeField& field, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Form> relations;
    if (flavor == Flavor::lie) {
        std::uint64_t cap = std::uint64_t(t.n) * (t.n + 1) / 2;
        if (t.r() > cap)
            throw std::invalid_argument(
                "lie type admits at most n(n+1)/2 quadratic relations");
        for (std::uint32_t d : t.degrees)
            if (d != 2)
                throw std::invalid_argument("lie relations must be quadratic");
        for (std::uint32_t i = 0; i < t.r(); ++i) {
            std::vector<std::pair<Monomial, FieldElement>> terms;
            for (std::uint32_t j = 0; j < t.n; ++j)
                terms.emplace_back(Monomial::word({j, j}), rng.uniform(field));
            for (std::uint32_t j = 0; j < t.n; ++j)
                for (std::uint32_t l = j + 1; l < t.n; ++l) {
                    FieldElement c = rng.uniform(field);
                    terms.emplace_back(Monomial::word({j, l}), c);
                    terms.emplace_back(Monomial::word({l, j}), c);
                }
            relations.push_back(Form::make(Flavor::noncommutative, t.n, 2,
                                           std::move(terms), field));
        }
    } else {
        for (std::uint32_t d : t.degrees) {
            auto monos = enumerate_monomials(flavor, t.n, d);
            std::vector<std::pair<Monomial, FieldElement>> terms;
            terms.reserve(monos.size());
            for (const auto& m : monos)
                terms.emplace_back(m, rng.uniform(field));
            relations.push_back(Form::make(flavor, t.n, d, std::move(terms), field));
        }
    }
    return Presentation(flavor, numbered_names("x", 1, t.n), field,
                        std::move(relations));
}

GenericReport generic_estimate(Flavor flavor, const AlgebraType& t,
                               std::uint32_t trunc, std::uint32_t samples,
                               std::uint64_t base_seed, const PrimeField& field) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    GenericReport rep{t, flavor, field.modulus(), {}, {}, PowerSeries(trunc), {}};
    for (std::uint32_t s = 0; s < samples; ++s) {
        std::uint64_t seed = base_seed + s;
        rep.seeds.push_back(seed);
        Presentation p = sample_presentation(flavor, t, field, seed);
        rep.per_sample_series.push_back(hilbert_series(p, trunc).series);
    }
    rep.estimate = rep.per_sample_series.front();
    for (const auto& s : rep.per_sample_series)
        for (std::size_t d = 0; d <= trunc; ++d)
            if (s[d] < rep.estimate[d]) rep.estimate[d] = s[d];
    rep.unanimous.assign(trunc + 1, true);
    for (const auto& s : rep.per_sample_series)
        for (std::size_t d = 0; d <= trunc; ++d)
            if (s[d] != rep.estimate[d]) rep.unanimous[d] = false;
    return rep;
}

namespace {

Presentation bipartite_construction(std::uint32_t n, bool lie) {
    if (n < 2) throw std::invalid_argument("construction needs n >= 2");
    std::uint32_t s = n / 2;
    std::uint32_t ycount = n - s;  // s for even n, s + 1 for odd
    std::vector<std::string> names = numbered_names("x", 1, s);
    auto ys = numbered_names("y", 1, ycount);
    names.insert(names.end(), ys.begin(), ys.end());
    PrimeField field;
    std::vector<Form> relations;
    for (std::uint32_t i = 0; i < ycount; ++i) {
        for (std::uint32_t j = 0; j < s; ++j) {
            std::uint32_t y = s + i, x = j;
            std::vector<std::pair<Monomial, FieldElement>> terms;
            terms.emplace_back(Monomial::word({y, x}), field.one());
            if (lie) terms.emplace_back(Monomial::word({x, y}), field.one());
            relations.push_back(Form::make(Flavor::noncommutative,
                                           static_cast<std::uint32_t>(names.size()),
                                           2, std::move(terms), field));
        }
    }
    return Presentation(lie ? Flavor::lie : Flavor::noncommutative, names, field,
                        std::move(relations));
}

}  // namespace

Presentation construct_strongly_free(std::uint32_t n) {
    return bipartite_construction(n, false);
}

Presentation construct_lie_strongly_free(std::uint32_t n) {
    return bipartite_construction(n, true);
}

Presentation construct_anick(std::uint32_t n, bool spanning) {
    if (n < 2) throw std::invalid_argument("construction needs n >= 2");
    std::uint32_t s = n / 2;
    PrimeField field;
    FieldElement one = field.one(), minus = field.neg(field.one());
    std::vector<std::string> names = numbered_names("x", 1, s);
    bool odd = n % 2 == 1;
    std::uint32_t y0 = 0;  // index of y_0 when odd
    if (odd) {
        names.push_back("y0");
        y0 = s;
    }
    auto ys = numbered_names("y", 1, s);
    names.insert(names.end(), ys.begin(), ys.end());
    auto xi = [&](std::uint32_t i) { return i; };            // 0-based
    auto yi = [&](std::uint32_t i) { return s + (odd ? 1 : 0) + i; };

    std::vector<Form> relations;
    auto add = [&](std::vector<std::pair<Monomial, FieldElement>> terms) {
        relations.push_back(Form::make(Flavor::noncommutative,
                                       static_cast<std::uint32_t>(names.size()),
                                       2, std::move(terms), field));
    };
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = 0; j < s; ++j)
            add({{Monomial::word({xi(i), yi(j)}), one}});
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = 0; j < s; ++j)
            add({{Monomial::word({xi(i), xi(j)}), one},
                 {Monomial::word({yi(i), yi(j)}), minus}});
    if (odd) {
        for (std::uint32_t i = 0; i < s; ++i)
            add({{Monomial::word({y0, xi(i)}), one},
                 {Monomial::word({xi(i), y0}), one},
                 {Monomial::word({yi(i), y0}), one}});
        for (std::uint32_t i = 0; i < s; ++i)
            add({{Monomial::word({y0, yi(i)}), one},
                 {Monomial::word({yi(i), y0}), one}});
        if (spanning) add({{Monomial::word({y0, y0}), one}});
    }
    return Presentation(Flavor::noncommutative, names, field, std::move(relations));
}

namespace {

const char* kCorpusTexts[][2] = {
    {"exAt_i",
     "flavor commutative\nvars x, y\nrel x*x\nrel x*y\nrel y*y*y\n"},
    {"exAt_ii",
     "flavor commutative\nvars x, y\nrel x*x\nrel x*y\nrel y*y*y*y\n"},
    {"exAt_iii",
     "flavor commutative\nvars x, y, z\nrel x*x\nrel y*z\nrel x*y + z*z\nrel "
     "y*y*y\n"},
    {"exAt_iv",
     "flavor commutative\nvars x1, x2, x3, x4\nrel x1*x1\nrel x1*x2\nrel "
     "x1*x3\nrel x1*x4\nrel x2*x2\nrel x2*x3*x3\nrel x2*x3*x4\nrel "
     "x2*x4*x4\nrel x3*x3*x3\nrel x3*x3*x4\nrel x3*x4*x4\nrel x4*x4*x4\n"},
    {"thm_ex_a",
     "flavor commutative\nvars a, b, c, d\nrel a*a\nrel b*b\nrel c*c\nrel a*d "
     "- d*d\nrel a*c - b*d\nrel c*d\n"},
    {"thm_ex_a_nc",
     "flavor noncommutative\nvars a, b, c, d\nrel a*a\nrel b*b\nrel c*c\nrel "
     "a*d - d*d\nrel a*c - b*d\nrel c*d\nrel a*b - b*a\nrel a*c - c*a\nrel "
     "a*d - d*a\nrel b*c - c*b\nrel b*d - d*b\nrel c*d - d*c\n"},
    {"thm_ex_b",
     "flavor noncommutative\nvars a, b, c, d\nrel a*a\nrel b*b\nrel d*d\nrel "
     "a*d\nrel c*a\nrel c*d\nrel d*a\nrel d*b\nrel d*c\nrel b*a\nrel a*b + "
     "a*c\nrel b*c + c*b\nrel b*c + c*c\n"},
    {"thm_ex_c",
     "flavor lie\nvars a, b, c\nrel b*b\nrel [a,b] - c*c\nrel [a,c]\n"},
    {"thm_ex_a_dual",
     "flavor lie\nvars a, b, c, d\nrel [a,b]\nrel [b,c]\nrel [a,c] + "
     "[b,d]\nrel [a,d] + d*d\n"},
    {"thm_ex_b_dual",
     "flavor noncommutative\nvars a, b, c, d\nrel a*b - a*c\nrel b*c - c*b - "
     "c*c\nrel b*d\n"},
    {"thm_ex_c_dual",
     "flavor commutative\nvars a, b, c\nrel a*a\nrel b*c\nrel a*b + c*c\n"},
};

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        for (const auto& [name, text] : kCorpusTexts)
            out.push_back({name, parse_presentation(text)});
        return out;
    }();
    return entries;
}

const Presentation& corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e.presentation;
    throw std::out_of_range("no corpus entry named '" + name + "'");
}

}  // namespace halg

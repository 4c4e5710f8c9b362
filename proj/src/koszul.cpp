#include "halg/koszul.hpp"

#include <stdexcept>

#include "halg/hilbert.hpp"
#include "halg/series.hpp"

namespace halg {

namespace {

void require_quadratic(const Presentation& p) {
    for (const auto& f : p.relations)
        if (f.degree != 2)
            throw std::invalid_argument("non-quadratic relation");
}

SparseRow pair_row(std::vector<std::pair<std::uint32_t, FieldElement>> entries) {
    std::sort(entries.begin(), entries.end());
    return entries;
}

}  // namespace

QuadraticSubspace embed(const Presentation& p) {
    require_quadratic(p);
    if (p.field.modulus() < 3)
        throw std::invalid_argument("quadratic duality needs odd characteristic");
    const std::uint32_t n = p.n;
    RrefBuilder builder(std::uint64_t(n) * n, p.field);
    if (p.flavor == Flavor::commutative) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                builder.add_row(pair_row({{i * n + j, p.field.one()},
                                          {j * n + i, p.field.neg(p.field.one())}}));
        FieldElement half = p.field.inv(p.field.from_int(2));
        for (const auto& f : p.relations) {
            std::vector<std::pair<std::uint32_t, FieldElement>> entries;
            for (const auto& [m, c] : f.terms) {
                std::uint32_t i = 0;
                while (m.data[i] == 0) ++i;
                if (m.data[i] == 2) {
                    entries.emplace_back(i * n + i, c);
                } else {
                    std::uint32_t j = i + 1;
                    while (m.data[j] == 0) ++j;
                    FieldElement ch = p.field.mul(c, half);
                    entries.emplace_back(i * n + j, ch);
                    entries.emplace_back(j * n + i, ch);
                }
            }
            builder.add_row(pair_row(std::move(entries)));
        }
    } else {
        // noncommutative and (expanded) lie rows are coordinate rows as-is
        for (const auto& f : p.relations) {
            std::vector<std::pair<std::uint32_t, FieldElement>> entries;
            for (const auto& [m, c] : f.terms)
                entries.emplace_back(m.data[0] * n + m.data[1], c);
            builder.add_row(pair_row(std::move(entries)));
        }
    }
    return {n, p.flavor, builder.to_matrix()};
}

QuadraticSubspace annihilator(const QuadraticSubspace& u) {
    Flavor dual = u.flavor == Flavor::noncommutative
                      ? Flavor::noncommutative
                      : (u.flavor == Flavor::commutative ? Flavor::lie
                                                         : Flavor::commutative);
    return {u.n, dual, nullspace(u.basis)};
}

Presentation koszul_dual(const Presentation& p) {
    QuadraticSubspace u0 = annihilator(embed(p));
    const std::uint32_t n = p.n;
    std::vector<Form> forms;
    if (u0.flavor == Flavor::noncommutative || u0.flavor == Flavor::lie) {
        // rows are already the relation coordinates
        for (const auto& row : u0.basis.entries) {
            std::vector<std::pair<Monomial, FieldElement>> terms;
            for (const auto& [c, v] : row)
                terms.emplace_back(Monomial::word({c / n, c % n}), v);
            forms.push_back(Form::make(Flavor::noncommutative, n, 2,
                                       std::move(terms), p.field));
        }
    } else {
        // quotient the antisymmetrizers away: symmetrize, then re-reduce
        // in commutative monomial coordinates
        RrefBuilder builder(monomial_count(Flavor::commutative, n, 2), p.field);
        for (const auto& row : u0.basis.entries) {
            std::vector<std::pair<std::uint32_t, FieldElement>> entries;
            for (const auto& [c, v] : row) {
                std::uint32_t i = c / n, j = c % n;
                std::vector<std::uint32_t> exps(n, 0);
                ++exps[i];
                ++exps[j];
                // x_i x_j picks up v from both (i,j) and (j,i); the
                // diagonal contributes v once
                entries.emplace_back(
                    static_cast<std::uint32_t>(monomial_index(
                        Flavor::commutative, n, Monomial::exponents(exps))),
                    v);
            }
            std::sort(entries.begin(), entries.end());
            SparseRow merged;
            for (const auto& [c, v] : entries) {
                if (!merged.empty() && merged.back().first == c)
                    merged.back().second = p.field.add(merged.back().second, v);
                else
                    merged.emplace_back(c, v);
            }
            std::erase_if(merged, [](const auto& e) { return e.second.value == 0; });
            builder.add_row(std::move(merged));
        }
        auto monos = enumerate_monomials(Flavor::commutative, n, 2);
        for (const auto& row : builder.to_matrix().entries) {
            std::vector<std::pair<Monomial, FieldElement>> terms;
            for (const auto& [c, v] : row) terms.emplace_back(monos[c], v);
            forms.push_back(
                Form::make(Flavor::commutative, n, 2, std::move(terms), p.field));
        }
    }
    return Presentation(u0.flavor, p.names, p.field, std::move(forms));
}

bool koszul_numerical_test(const Presentation& p, std::uint32_t trunc) {
    PowerSeries a = hilbert_series(p, trunc).series;
    PowerSeries dual = hilbert_series(koszul_dual(p), trunc).series;
    return mul(a, alternate(dual)) == PowerSeries::one(trunc);
}

}  // namespace halg

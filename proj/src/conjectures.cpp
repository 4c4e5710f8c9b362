#include "halg/conjectures.hpp"

#include "halg/generic.hpp"
#include "halg/hilbert.hpp"
#include "halg/koszul.hpp"

namespace halg {

namespace {

void finish(ConjectureVerdict& v) {
    v.match.assign(v.expected.trunc() + 1, false);
    for (std::size_t d = 0; d <= v.expected.trunc(); ++d)
        v.match[d] = v.expected[d] == v.observed[d];
    v.overall_match =
        std::all_of(v.match.begin(), v.match.end(), [](bool b) { return b; });
}

// Bracket of a Lie dimension series: constant term is 0 by
// construction, positivity is enforced from degree 1 on.
PowerSeries lie_bracket(const PowerSeries& L) {
    PowerSeries out(L.trunc());
    for (std::size_t k = 1; k <= L.trunc(); ++k) {
        if (L[k] <= 0) break;
        out[k] = L[k];
    }
    return out;
}

PowerSeries quadratic_inverse(std::uint32_t n, std::uint32_t r,
                              std::uint32_t trunc) {
    return inverse(PowerSeries::polynomial(
        trunc, {{0, 1}, {1, -mpq_class(n)}, {2, mpq_class(r)}}));
}

}  // namespace

ConjectureVerdict check_froberg(const AlgebraType& t, std::uint32_t trunc,
                                std::uint32_t samples, std::uint64_t seed,
                                const PrimeField& field) {
    ConjectureVerdict v{.id = "froberg",
                        .flavor = Flavor::commutative,
                        .t = t,
                        .trunc = trunc,
                        .samples = samples,
                        .seed = seed,
                        .prime = field.modulus()};
    v.expected = froberg_series(t, trunc);
    v.observed =
        generic_estimate(Flavor::commutative, t, trunc, samples, seed, field)
            .estimate;
    std::uint32_t r = t.r();
    v.proven_regime = r <= t.n || t.n <= 3 || r == t.n + 1;
    finish(v);
    return v;
}

ConjectureVerdict check_anick_quadratic(std::uint32_t n, std::uint32_t r,
                                        std::uint32_t trunc, std::uint32_t samples,
                                        std::uint64_t seed,
                                        const PrimeField& field) {
    AlgebraType t = AlgebraType::quadratic(n, r);
    ConjectureVerdict v{.id = "anick",
                        .flavor = Flavor::noncommutative,
                        .t = t,
                        .trunc = trunc,
                        .samples = samples,
                        .seed = seed,
                        .prime = field.modulus()};
    v.expected = bracket(quadratic_inverse(n, r, trunc));
    v.observed =
        generic_estimate(Flavor::noncommutative, t, trunc, samples, seed, field)
            .estimate;
    std::uint64_t n2 = std::uint64_t(n) * n;
    v.proven_regime = 4 * std::uint64_t(r) <= n2 || 2 * std::uint64_t(r) >= n2 ||
                      n <= 6;
    finish(v);
    return v;
}

ConjectureVerdict check_lie(std::uint32_t n, std::uint32_t r, std::uint32_t trunc,
                            std::uint32_t samples, std::uint64_t seed,
                            const PrimeField& field) {
    AlgebraType t = AlgebraType::quadratic(n, r);
    if (r > std::uint64_t(n) * (n + 1) / 2)
        throw std::invalid_argument(
            "lie type admits at most n(n+1)/2 quadratic relations");
    ConjectureVerdict v{.id = "lie",
                        .flavor = Flavor::lie,
                        .t = t,
                        .trunc = trunc,
                        .samples = samples,
                        .seed = seed,
                        .prime = field.modulus()};
    v.expected = lie_bracket(log_op(quadratic_inverse(n, r, trunc)));
    PowerSeries observed(trunc);
    for (std::uint32_t s = 0; s < samples; ++s) {
        Presentation p = sample_presentation(Flavor::lie, t, field, seed + s);
        PowerSeries L = lie_series(p, trunc);
        if (s == 0) {
            observed = L;
        } else {
            for (std::size_t d = 0; d <= trunc; ++d)
                if (L[d] < observed[d]) observed[d] = L[d];
        }
    }
    v.observed = observed;
    std::uint64_t n2 = std::uint64_t(n) * n;
    v.proven_regime =
        4 * std::uint64_t(r) <= n2 || 3 * std::uint64_t(r) >= n2 - 1;
    finish(v);
    return v;
}

ConjectureVerdict check_genkos(std::uint32_t n, std::uint32_t r,
                               std::uint32_t trunc, std::uint32_t samples,
                               std::uint64_t seed, const PrimeField& field) {
    AlgebraType t = AlgebraType::quadratic(n, r);
    ConjectureVerdict v{.id = "genkos",
                        .flavor = Flavor::noncommutative,
                        .t = t,
                        .trunc = trunc,
                        .samples = samples,
                        .seed = seed,
                        .prime = field.modulus()};
    std::uint64_t n2 = std::uint64_t(n) * n;
    v.expected_koszul =
        4 * std::uint64_t(r) <= n2 || 4 * std::uint64_t(r) >= 3 * n2;
    v.proven_regime = true;
    v.expected = PowerSeries::one(trunc);
    bool first = true;
    for (std::uint32_t s = 0; s < samples; ++s) {
        Presentation p =
            sample_presentation(Flavor::noncommutative, t, field, seed + s);
        PowerSeries a = hilbert_series(p, trunc).series;
        PowerSeries dual = hilbert_series(koszul_dual(p), trunc).series;
        PowerSeries product = mul(a, alternate(dual));
        if (first) {
            v.observed = product;
            first = false;
        }
        v.sample_pass.push_back(product == v.expected);
    }
    finish(v);
    bool all_pass = std::all_of(v.sample_pass.begin(), v.sample_pass.end(),
                                [](bool b) { return b; });
    v.agrees = all_pass == *v.expected_koszul;
    return v;
}

}  // namespace halg

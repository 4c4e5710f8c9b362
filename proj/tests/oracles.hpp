// Test-only oracles, independent of the library paths they check.
#ifndef HALG_TESTS_ORACLES_HPP
#define HALG_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "halg/matrix.hpp"
#include "halg/presentation.hpp"
#include "halg/series.hpp"

namespace halg::oracle {

/// Expand 1/(1 + sum_k denom[k] z^k) to degree D by the linear
/// recurrence a_m = -sum denom[k] a_{m-k}; denom[0] must be 1.
inline std::vector<mpz_class> recurrence_inverse(
    const std::vector<std::int64_t>& denom, std::uint32_t trunc) {
    std::vector<mpz_class> a(trunc + 1, 0);
    a[0] = 1;
    for (std::uint32_t m = 1; m <= trunc; ++m) {
        mpz_class acc = 0;
        for (std::uint32_t k = 1; k < denom.size() && k <= m; ++k)
            acc -= denom[k] * a[m - k];
        a[m] = acc;
    }
    return a;
}

/// Plain truncated polynomial product over mpz, for hand-built
/// expansions of product formulas.
inline std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& p,
                                       const std::vector<mpz_class>& q,
                                       std::uint32_t trunc) {
    std::vector<mpz_class> out(trunc + 1, 0);
    for (std::size_t i = 0; i < p.size() && i <= trunc; ++i)
        for (std::size_t j = 0; j < q.size() && i + j <= trunc; ++j)
            out[i + j] += p[i] * q[j];
    return out;
}

/// dim (f_1,...,f_r)_d by brute force: the rank of the full matrix of
/// monomial multiples m * f_i * m' (noncommutative) or m * f_i
/// (commutative). Exponential in d; intended for small cases only.
inline std::uint64_t brute_force_slice_dim(const Presentation& pres,
                                           std::uint32_t d) {
    Presentation p =
        pres.flavor == Flavor::lie ? expand_lie(pres) : pres;
    const Flavor f =
        p.flavor == Flavor::commutative ? Flavor::commutative
                                        : Flavor::noncommutative;
    RrefBuilder builder(monomial_count(f, p.n, d), p.field);
    for (const auto& form : p.relations) {
        if (form.degree > d) continue;
        std::uint32_t rest = d - form.degree;
        for (std::uint32_t a = 0; a <= rest; ++a) {
            std::uint32_t b = rest - a;
            if (f == Flavor::commutative && b > 0) continue;  // left only
            for (const auto& left : enumerate_monomials(f, p.n, a)) {
                for (const auto& right : enumerate_monomials(f, p.n, b)) {
                    SparseRow row;
                    for (const auto& [m, c] : form.terms) {
                        Monomial prod = monomial_mul(
                            f, monomial_mul(f, left, m), right);
                        row.emplace_back(
                            static_cast<std::uint32_t>(
                                monomial_index(f, p.n, prod)),
                            c);
                    }
                    std::sort(row.begin(), row.end());
                    // commutative multiples can collide; merge
                    SparseRow merged;
                    for (const auto& [col, v] : row) {
                        if (!merged.empty() && merged.back().first == col)
                            merged.back().second =
                                p.field.add(merged.back().second, v);
                        else
                            merged.emplace_back(col, v);
                    }
                    std::erase_if(merged, [](const auto& e) {
                        return e.second.value == 0;
                    });
                    builder.add_row(std::move(merged));
                }
            }
        }
    }
    return builder.rank();
}

/// Deterministic test rng (not the library's sampler).
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : s_(seed * 2654435769ULL + 1) {}
    std::uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t s_;
};

}  // namespace halg::oracle

#endif

#include "halg/series.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace halg {

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs a constant term");
    for (auto& q : c_) q.canonicalize();
}

PowerSeries PowerSeries::one(std::uint32_t trunc) {
    PowerSeries s(trunc);
    s.c_[0] = 1;
    return s;
}

PowerSeries PowerSeries::polynomial(
    std::uint32_t trunc,
    const std::vector<std::pair<std::uint32_t, mpq_class>>& terms) {
    PowerSeries s(trunc);
    for (const auto& [d, c] : terms)
        if (d <= trunc) s.c_[d] += c;
    return s;
}

PowerSeries PowerSeries::extended(std::uint32_t d) const {
    PowerSeries out(d);
    for (std::size_t k = 0; k <= std::min<std::size_t>(d, trunc()); ++k)
        out.c_[k] = c_[k];
    return out;
}

bool PowerSeries::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) {
        return q.get_den() == 1;
    });
}

namespace {

std::uint32_t common_trunc(const PowerSeries& s, const PowerSeries& t) {
    return std::min(s.trunc(), t.trunc());
}

void require_equal_trunc(const PowerSeries& s, const PowerSeries& t) {
    if (s.trunc() != t.trunc())
        throw std::invalid_argument("series truncations differ");
}

}  // namespace

PowerSeries add(const PowerSeries& s, const PowerSeries& t) {
    PowerSeries out(common_trunc(s, t));
    for (std::size_t k = 0; k <= out.trunc(); ++k) out[k] = s[k] + t[k];
    return out;
}

PowerSeries sub(const PowerSeries& s, const PowerSeries& t) {
    PowerSeries out(common_trunc(s, t));
    for (std::size_t k = 0; k <= out.trunc(); ++k) out[k] = s[k] - t[k];
    return out;
}

PowerSeries mul(const PowerSeries& s, const PowerSeries& t) {
    PowerSeries out(common_trunc(s, t));
    for (std::size_t i = 0; i <= out.trunc(); ++i) {
        if (s[i] == 0) continue;
        for (std::size_t j = 0; i + j <= out.trunc(); ++j)
            if (t[j] != 0) out[i + j] += s[i] * t[j];
    }
    return out;
}

PowerSeries inverse(const PowerSeries& s) {
    if (s[0] == 0) throw std::domain_error("non-invertible series");
    PowerSeries out(s.trunc());
    out[0] = 1 / s[0];
    for (std::size_t k = 1; k <= s.trunc(); ++k) {
        mpq_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += s[j] * out[k - j];
        out[k] = -acc / s[0];
    }
    return out;
}

PowerSeries alternate(const PowerSeries& s) {
    PowerSeries out(s.trunc());
    for (std::size_t k = 0; k <= s.trunc(); ++k)
        out[k] = (k % 2 == 0) ? s[k] : -s[k];
    return out;
}

PowerSeries bracket(const PowerSeries& s) {
    PowerSeries out(s.trunc());
    for (std::size_t k = 0; k <= s.trunc(); ++k) {
        if (s[k] <= 0) break;
        out[k] = s[k];
    }
    return out;
}

Ordering lex_compare(const PowerSeries& s, const PowerSeries& t) {
    require_equal_trunc(s, t);
    for (std::size_t k = 0; k <= s.trunc(); ++k) {
        if (s[k] > t[k]) return Ordering::greater;
        if (s[k] < t[k]) return Ordering::less;
    }
    return Ordering::equal;
}

bool coeffwise_ge(const PowerSeries& s, const PowerSeries& t) {
    require_equal_trunc(s, t);
    for (std::size_t k = 0; k <= s.trunc(); ++k)
        if (s[k] < t[k]) return false;
    return true;
}

AlgebraType::AlgebraType(std::uint32_t n_, std::vector<std::uint32_t> degs)
    : n(n_), degrees(std::move(degs)) {
    if (n < 1) throw std::invalid_argument("type needs at least one generator");
    std::sort(degrees.begin(), degrees.end());
    if (!degrees.empty() && degrees.front() < 2)
        throw std::invalid_argument("relation degrees must be >= 2");
}

AlgebraType AlgebraType::quadratic(std::uint32_t n, std::uint32_t r) {
    return AlgebraType(n, std::vector<std::uint32_t>(r, 2));
}

PowerSeries froberg_series(const AlgebraType& t, std::uint32_t trunc) {
    PowerSeries num = PowerSeries::one(trunc);
    for (std::uint32_t d : t.degrees) {
        if (d > trunc) continue;
        num = mul(num, PowerSeries::polynomial(trunc, {{0, 1}, {d, -1}}));
    }
    PowerSeries denom = PowerSeries::one(trunc);
    PowerSeries lin = PowerSeries::polynomial(trunc, {{0, 1}, {1, -1}});
    for (std::uint32_t i = 0; i < t.n; ++i) denom = mul(denom, lin);
    return bracket(mul(num, inverse(denom)));
}

PowerSeries anick_polynomial(const AlgebraType& t) {
    std::uint32_t deg = 1;
    for (std::uint32_t d : t.degrees) deg = std::max(deg, d);
    PowerSeries p(deg);
    p[0] = 1;
    p[1] = -mpq_class(t.n);
    for (std::uint32_t d : t.degrees) p[d] += 1;
    return p;
}

namespace {

// C(e, k) for a nonnegative integer e given as mpz; zero when e < k.
mpz_class binomial_z(const mpz_class& e, std::uint32_t k) {
    mpz_class num = 1;
    for (std::uint32_t i = 0; i < k; ++i) num *= e - i;
    mpz_class den = 1;
    for (std::uint32_t i = 2; i <= k; ++i) den *= i;
    return num / den;
}

}  // namespace

PowerSeries exp_op(const PowerSeries& L) {
    if (L[0] != 0)
        throw std::invalid_argument("not a dimension series");
    for (std::size_t k = 1; k <= L.trunc(); ++k)
        if (L[k].get_den() != 1 || L[k] < 0)
            throw std::invalid_argument("not a dimension series");

    std::uint32_t D = L.trunc();
    PowerSeries out = PowerSeries::one(D);
    for (std::uint32_t i = 1; i <= D; ++i) {
        mpz_class e = L[i].get_num();
        if (e == 0) continue;
        PowerSeries factor(D);
        if (i % 2 == 1) {
            // (1 + z^i)^e
            for (std::uint32_t k = 0; k * i <= D; ++k)
                factor[k * i] = binomial_z(e, k);
        } else {
            // (1 - z^i)^{-e}
            for (std::uint32_t k = 0; k * i <= D; ++k)
                factor[k * i] = binomial_z(e + k - 1, k);
        }
        out = mul(out, factor);
    }
    return out;
}

PowerSeries log_op(const PowerSeries& V) {
    if (V[0] != 1)
        throw std::invalid_argument("log_op requires constant term 1");
    std::uint32_t D = V.trunc();
    // W = log V from V W' = V', coefficientwise.
    PowerSeries W(D);
    for (std::uint32_t k = 1; k <= D; ++k) {
        mpq_class acc = mpq_class(k) * V[k];
        for (std::uint32_t j = 1; j < k; ++j) acc -= mpq_class(j) * W[j] * V[k - j];
        W[k] = acc / k;
    }
    PowerSeries out(D);
    for (std::uint32_t r = 1; r <= D; ++r) {
        int mu = mobius(r);
        if (mu == 0) continue;
        mpq_class scale(mu, r);
        scale.canonicalize();
        for (std::uint32_t k = 1; k * r <= D; ++k) {
            // W evaluated at (-1)^{r+1} z^r
            bool negate = (r % 2 == 0) && (k % 2 == 1);
            mpq_class term = scale * W[k];
            out[k * r] += negate ? -term : term;
        }
    }
    return out;
}

int mobius(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mobius requires m >= 1");
    int primes = 0;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            ++primes;
        }
    }
    if (m > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

PositivityReport quadratic_inverse_positivity(std::uint32_t n, std::uint64_t r,
                                              std::uint32_t trunc) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    mpz_class prev = 1;  // a_0
    mpz_class cur = n;   // a_1
    std::optional<std::uint32_t> first;
    for (std::uint32_t k = 1; k <= trunc; ++k) {
        if (cur <= 0 && !first) first = k;
        mpz_class next = cur * n - prev * mpz_class(r);
        prev = cur;
        cur = next;
    }
    return {!first.has_value(), first};
}

namespace {

// tan^2(pi/m) as an exact rational where one exists (m = 3, 4, 6).
std::optional<mpq_class> exact_tan2(std::uint32_t m) {
    if (m == 3) return mpq_class(3);
    if (m == 4) return mpq_class(1);
    if (m == 6) return mpq_class(1, 3);
    return std::nullopt;
}

// Decide tan^2(pi/m) <= q for m >= 3, widening precision until the
// outward-rounded interval separates from q.
bool tan2_le(std::uint32_t m, const mpq_class& q) {
    if (auto e = exact_tan2(m)) return *e <= q;
    for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
        mpfr_t pi, x, t;
        mpfr_inits2(prec, pi, x, t, static_cast<mpfr_ptr>(nullptr));
        // lower bound of tan^2(pi/m)
        mpfr_const_pi(pi, MPFR_RNDD);
        mpfr_div_ui(x, pi, m, MPFR_RNDD);
        mpfr_tan(t, x, MPFR_RNDD);
        mpfr_sqr(t, t, MPFR_RNDD);
        int lo_cmp = mpfr_cmp_q(t, q.get_mpq_t());
        // upper bound
        mpfr_const_pi(pi, MPFR_RNDU);
        mpfr_div_ui(x, pi, m, MPFR_RNDU);
        mpfr_tan(t, x, MPFR_RNDU);
        mpfr_sqr(t, t, MPFR_RNDU);
        int hi_cmp = mpfr_cmp_q(t, q.get_mpq_t());
        mpfr_clears(pi, x, t, static_cast<mpfr_ptr>(nullptr));
        if (hi_cmp <= 0) return true;
        if (lo_cmp > 0) return false;
    }
    throw std::logic_error("tan^2 comparison did not converge");
}

}  // namespace

std::uint32_t vanishing_threshold(std::uint32_t n, std::uint64_t r) {
    mpz_class n2 = mpz_class(n) * n;
    mpz_class four_r = 4 * mpz_class(r);
    if (four_r <= n2) throw std::domain_error("series never vanishes");
    mpq_class q(four_r - n2, n2);
    q.canonicalize();
    for (std::uint32_t k = 2; k <= 8 * n + 32; ++k) {
        if (tan2_le(k + 1, q)) return k;
    }
    throw std::logic_error("vanishing threshold out of range");
}

std::vector<std::string> series_strings(const PowerSeries& s) {
    std::vector<std::string> out;
    out.reserve(s.trunc() + 1);
    for (std::size_t k = 0; k <= s.trunc(); ++k) out.push_back(s[k].get_str());
    return out;
}

}  // namespace halg

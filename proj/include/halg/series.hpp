#ifndef HALG_SERIES_HPP
#define HALG_SERIES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace halg {

/// Truncated formal power series with exact rational coefficients
/// a_0 .. a_D (the truncation degree D is coeffs().size() - 1).
class PowerSeries {
  public:
    explicit PowerSeries(std::uint32_t trunc) : c_(trunc + 1, mpq_class(0)) {}
    explicit PowerSeries(std::vector<mpq_class> coeffs);

    static PowerSeries one(std::uint32_t trunc);
    /// Series with the given (degree, coefficient) terms; terms beyond
    /// the truncation are dropped.
    static PowerSeries polynomial(std::uint32_t trunc,
                                  const std::vector<std::pair<std::uint32_t, mpq_class>>& terms);

    std::uint32_t trunc() const { return static_cast<std::uint32_t>(c_.size() - 1); }
    const mpq_class& operator[](std::size_t k) const { return c_.at(k); }
    mpq_class& operator[](std::size_t k) { return c_.at(k); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    /// Same series re-truncated (zero-padded or cut) at degree d.
    PowerSeries extended(std::uint32_t d) const;

    bool is_integral() const;
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  private:
    std::vector<mpq_class> c_;
};

enum class Ordering { less, equal, greater };

PowerSeries add(const PowerSeries& s, const PowerSeries& t);
PowerSeries sub(const PowerSeries& s, const PowerSeries& t);
PowerSeries mul(const PowerSeries& s, const PowerSeries& t);
/// Multiplicative inverse; requires nonzero constant term.
PowerSeries inverse(const PowerSeries& s);
/// s(-z).
PowerSeries alternate(const PowerSeries& s);

/// [s]: coefficients survive while all earlier ones (including a_0)
/// are strictly positive; from the first nonpositive on, zero.
PowerSeries bracket(const PowerSeries& s);

Ordering lex_compare(const PowerSeries& s, const PowerSeries& t);
bool coeffwise_ge(const PowerSeries& s, const PowerSeries& t);

/// Generator/relation-degree type (n; d_1 <= ... <= d_r), all d_i >= 2.
struct AlgebraType {
    std::uint32_t n = 1;
    std::vector<std::uint32_t> degrees;

    AlgebraType(std::uint32_t n_, std::vector<std::uint32_t> degs);
    static AlgebraType quadratic(std::uint32_t n, std::uint32_t r);
    std::uint32_t r() const { return static_cast<std::uint32_t>(degrees.size()); }
    friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
};

/// [prod (1 - z^{d_i}) / (1 - z)^n], truncated at D.
PowerSeries froberg_series(const AlgebraType& t, std::uint32_t trunc);

/// 1 - n z + sum z^{d_i}, as a series truncated at its own degree.
PowerSeries anick_polynomial(const AlgebraType& t);

/// prod (1+z^{2i-1})^{e_{2i-1}} / (1-z^{2i})^{e_{2i}} for L = sum e_i z^i.
/// L must have zero constant term and nonnegative integer coefficients.
PowerSeries exp_op(const PowerSeries& L);

/// Inverse of exp_op: sum_r mu(r)/r log(V((-1)^{r+1} z^r)).
/// V must have constant term 1.
PowerSeries log_op(const PowerSeries& V);

int mobius(std::uint64_t m);

struct PositivityReport {
    bool all_positive;
    std::optional<std::uint32_t> first_nonpositive_degree;
};

/// Expands 1/(1 - n z + r z^2) to degree D and scans a_1..a_D.
PositivityReport quadratic_inverse_positivity(std::uint32_t n, std::uint64_t r,
                                              std::uint32_t trunc);

/// Smallest k >= 2 with r >= (tan^2(pi/(k+1)) + 1) n^2 / 4.
/// Requires r > n^2/4.
std::uint32_t vanishing_threshold(std::uint32_t n, std::uint64_t r);

/// Exact string per coefficient, lowest degree first ("12", "-3", "1/2").
std::vector<std::string> series_strings(const PowerSeries& s);

}  // namespace halg

#endif

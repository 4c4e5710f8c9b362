#ifndef HALG_FIELD_HPP
#define HALG_FIELD_HPP

#include <compare>
#include <cstdint>

namespace halg {

/// Canonical residue in [0, p). Arithmetic lives on PrimeField.
struct FieldElement {
    std::uint32_t value = 0;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

/// The prime field F_p for an odd prime p, 3 <= p <= 2^31 - 1.
/// All element ops are pure; a PrimeField is freely copyable and
/// safe to share across threads.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t modulus() const { return p_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    /// Reduce an arbitrary signed integer to its canonical residue.
    FieldElement from_int(std::int64_t v) const;

    FieldElement add(FieldElement a, FieldElement b) const {
        std::uint32_t s = a.value + b.value;  // < 2^32, p < 2^31
        if (s >= p_) s -= p_;
        return {s};
    }
    FieldElement sub(FieldElement a, FieldElement b) const {
        return a.value >= b.value ? FieldElement{a.value - b.value}
                                  : FieldElement{a.value + p_ - b.value};
    }
    FieldElement neg(FieldElement a) const {
        return a.value == 0 ? a : FieldElement{p_ - a.value};
    }
    FieldElement mul(FieldElement a, FieldElement b) const {
        return {static_cast<std::uint32_t>(
            (std::uint64_t(a.value) * b.value) % p_)};
    }
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;

  private:
    std::uint32_t p_;
};

bool operator==(const PrimeField& a, const PrimeField& b);

}  // namespace halg

#endif

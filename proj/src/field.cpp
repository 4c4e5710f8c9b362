#include "halg/field.hpp"

#include <stdexcept>

namespace halg {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p % 2 == 0) throw std::invalid_argument("prime must be odd");
    if (p < 3 || p > 2147483647u)
        throw std::invalid_argument("prime must satisfy 3 <= p <= 2^31-1");
    if (!is_prime_u32(p)) throw std::invalid_argument("modulus is not prime");
}

FieldElement PrimeField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement PrimeField::inv(FieldElement a) const {
    if (a.value == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a.value;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return {static_cast<std::uint32_t>(t)};
}

bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.modulus() == b.modulus();
}

}  // namespace halg

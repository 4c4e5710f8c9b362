#ifndef HALG_PRESENTATION_HPP
#define HALG_PRESENTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "halg/field.hpp"
#include "halg/series.hpp"

namespace halg {

enum class Flavor { commutative, noncommutative, lie };

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);

/// A monomial of fixed degree. Noncommutative: a word of generator
/// indices (degree = length). Commutative: an exponent vector of
/// length n (degree = sum).
struct Monomial {
    std::vector<std::uint32_t> data;

    static Monomial word(std::vector<std::uint32_t> letters);
    static Monomial exponents(std::vector<std::uint32_t> exps);

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::uint32_t monomial_degree(Flavor f, const Monomial& m);

/// Canonical order: by degree, then lexicographic on words (NC) /
/// lexicographic-descending on exponent vectors (commutative).
bool monomial_less(Flavor f, const Monomial& a, const Monomial& b);

/// Number of monomials of degree d: n^d (NC) or C(n+d-1, d).
std::uint64_t monomial_count(Flavor f, std::uint32_t n, std::uint32_t d);

/// Position of m within the canonical ordering of its degree.
std::uint64_t monomial_index(Flavor f, std::uint32_t n, const Monomial& m);

/// All monomials of degree d in canonical order.
std::vector<Monomial> enumerate_monomials(Flavor f, std::uint32_t n,
                                          std::uint32_t d);

Monomial monomial_mul(Flavor f, const Monomial& a, const Monomial& b);

/// A homogeneous form: sparse terms of one common degree, canonically
/// sorted, no zero coefficients. A relation may be the zero form (no
/// terms) with its degree tag kept.
struct Form {
    std::uint32_t degree = 2;
    std::vector<std::pair<Monomial, FieldElement>> terms;

    static Form make(Flavor f, std::uint32_t n, std::uint32_t degree,
                     std::vector<std::pair<Monomial, FieldElement>> terms,
                     const PrimeField& field);

    FieldElement coeff(const Monomial& m) const;
    friend bool operator==(const Form&, const Form&) = default;
};

/// F/(f_1,...,f_r) in one of the three flavors. Lie relations are kept
/// in expanded associative coordinates (the bracket [a,b] contributes
/// ab + ba), constrained to the span of squares and symmetrized pairs.
struct Presentation {
    Flavor flavor = Flavor::commutative;
    std::uint32_t n = 1;
    std::vector<std::string> names;
    PrimeField field;
    std::vector<Form> relations;

    Presentation(Flavor flavor, std::vector<std::string> names, PrimeField field,
                 std::vector<Form> relations);

    std::uint32_t max_relation_degree() const;
};

/// Reinterpret a lie-flavor presentation as the associative quotient by
/// the same (expanded) relations.
Presentation expand_lie(const Presentation& p);

/// (n; sorted relation degrees) of the presentation as given.
AlgebraType type_of_presentation(const Presentation& p);

}  // namespace halg

#endif

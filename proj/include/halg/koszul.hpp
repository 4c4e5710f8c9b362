#ifndef HALG_KOSZUL_HPP
#define HALG_KOSZUL_HPP

#include <cstdint>

#include "halg/matrix.hpp"
#include "halg/presentation.hpp"

namespace halg {

/// A subspace of the tensor square V (x) V in rref, columns indexed by
/// ordered pairs (i,j) -> i*n + j. Commutative flavor: contains every
/// antisymmetrizer e_ij - e_ji. Lie flavor: contained in the symmetric
/// subspace.
struct QuadraticSubspace {
    std::uint32_t n;
    Flavor flavor;
    MatrixOverField basis;
};

/// Relation space of a quadratic presentation inside the tensor square.
/// Commutative relations contribute (c/2)(e_ij + e_ji) off the diagonal.
QuadraticSubspace embed(const Presentation& p);

/// {f : f(U) = 0} under the coordinate pairing; the flavor flips
/// commutative <-> lie and fixes noncommutative.
QuadraticSubspace annihilator(const QuadraticSubspace& u);

/// Quadratic dual: embed, annihilate, read back as a presentation on
/// the same generator names in the flipped flavor.
Presentation koszul_dual(const Presentation& p);

/// Checks A(z) * A^!(-z) == 1 through degree D. Failure certifies
/// non-Koszulness; success is a bounded necessary condition only.
bool koszul_numerical_test(const Presentation& p, std::uint32_t trunc);

}  // namespace halg

#endif

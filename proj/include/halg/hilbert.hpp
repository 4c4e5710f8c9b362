#ifndef HALG_HILBERT_HPP
#define HALG_HILBERT_HPP

#include <cstdint>
#include <vector>

#include "halg/matrix.hpp"
#include "halg/presentation.hpp"
#include "halg/series.hpp"

namespace halg {

/// Canonical (rref) basis of the ideal's degree-d slice, columns
/// indexed by enumerate_monomials order for that degree.
struct DegreeSliceBasis {
    std::uint32_t degree;
    MatrixOverField basis;
};

struct HilbertResult {
    PowerSeries series;                 // dim A_d, nonnegative integers
    std::vector<mpz_class> slice_dims;  // dim I_d, d = 0..trunc
    std::uint32_t trunc;
};

/// Degreewise bases of the ideal up to degree D (lie flavor is
/// expanded to associative coordinates first).
std::vector<DegreeSliceBasis> ideal_slices(const Presentation& p,
                                           std::uint32_t trunc);

/// Hilbert series of F/(relations): a_d = (full slice dim) - dim I_d.
HilbertResult hilbert_series(const Presentation& p, std::uint32_t trunc);

/// Dimension series of the Lie superalgebra whose enveloping algebra
/// the expanded presentation defines: log_op of its Hilbert series.
PowerSeries lie_series(const Presentation& p, std::uint32_t trunc);

struct TypeAnalysis {
    AlgebraType type;           // type of the surviving relations
    bool minimal;               // no relation was dropped
    std::vector<std::size_t> dropped;  // original indices of dropped relations
};

/// Walks the relations in ascending degree, dropping each one that is
/// already in the ideal generated by its predecessors at its degree.
TypeAnalysis algebra_type(const Presentation& p, std::uint32_t trunc);

/// Certifies B(z) * p_t(z) == 1 through degree D (a bounded
/// certificate of strong freeness, not a proof for all degrees).
bool strongly_free_test(const Presentation& p, std::uint32_t trunc);

struct Degree3Report {
    bool independent;
    bool spanning;
    std::uint64_t rank;
};

/// Rank of {x_i f_j} (+ {f_j x_i} in the NC case) inside degree 3,
/// for quadratic relations only.
Degree3Report degree3_span_test(const Presentation& p);

}  // namespace halg

#endif

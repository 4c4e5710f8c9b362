#ifndef HALG_GENERIC_HPP
#define HALG_GENERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "halg/presentation.hpp"
#include "halg/series.hpp"

namespace halg {

/// Sampling report for one (flavor, type): per-sample Hilbert series,
/// their coefficientwise minimum, and per-degree unanimity. Each
/// sample dominates the generic series coefficientwise, so the
/// estimate is a degreewise upper-bound certificate for it.
struct GenericReport {
    AlgebraType t;
    Flavor flavor;
    std::uint32_t prime;
    std::vector<std::uint64_t> seeds;
    std::vector<PowerSeries> per_sample_series;
    PowerSeries estimate;
    std::vector<bool> unanimous;
};

/// Presentation of the given type with every monomial coefficient
/// drawn independently and uniformly from F_p; deterministic in
/// (seed, t, p). Lie flavor draws square and bracket coefficients
/// (squares first, then brackets in lexicographic order).
Presentation sample_presentation(Flavor flavor, const AlgebraType& t,
                                 const PrimeField& field, std::uint64_t seed);

GenericReport generic_estimate(Flavor flavor, const AlgebraType& t,
                               std::uint32_t trunc, std::uint32_t samples,
                               std::uint64_t base_seed, const PrimeField& field);

/// Bipartite monomial construction with r = floor(n^2/4) relations
/// y_i x_j; strongly free with series 1/(1 - nz + rz^2).
Presentation construct_strongly_free(std::uint32_t n);

/// Same construction with the relations changed to brackets [y_i, x_j].
Presentation construct_lie_strongly_free(std::uint32_t n);

/// Quadratic forms whose degree-3 multiples are independent (even n:
/// the 2s^2 forms x_i y_j, x_i x_j - y_i y_j; odd n: those plus the
/// 2s mixed forms in y_0); with `spanning`, odd n additionally gets
/// y_0^2 and the multiples generate all of degree 3.
Presentation construct_anick(std::uint32_t n, bool spanning);

struct CorpusEntry {
    std::string name;
    Presentation presentation;
};

/// The named example presentations and their stated duals.
const std::vector<CorpusEntry>& corpus();

/// Corpus entry by name; throws std::out_of_range on unknown names.
const Presentation& corpus_entry(const std::string& name);

}  // namespace halg

#endif

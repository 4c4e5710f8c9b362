#ifndef HALG_CONJECTURES_HPP
#define HALG_CONJECTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halg/presentation.hpp"
#include "halg/series.hpp"

namespace halg {

/// Outcome of one closed-form-vs-sampled comparison. `proven_regime`
/// reflects the hypotheses of the corresponding theorem, not the
/// observation; outside it a mismatch is a conjectural data point,
/// not an error.
struct ConjectureVerdict {
    std::string id;
    Flavor flavor;
    AlgebraType t;
    std::uint32_t trunc = 0;
    std::uint32_t samples = 0;
    std::uint64_t seed = 0;
    std::uint32_t prime = 0;
    PowerSeries expected{0};
    PowerSeries observed{0};
    std::vector<bool> match;  // per degree
    bool proven_regime = false;
    bool overall_match = false;
    // Koszul-regime checks only:
    std::optional<bool> expected_koszul;
    std::vector<bool> sample_pass;
    std::optional<bool> agrees;
};

/// Commutative: sampled estimate against the bracketed product formula.
ConjectureVerdict check_froberg(const AlgebraType& t, std::uint32_t trunc,
                                std::uint32_t samples, std::uint64_t seed,
                                const PrimeField& field);

/// Noncommutative quadratic: sampled estimate against [1/(1-nz+rz^2)].
ConjectureVerdict check_anick_quadratic(std::uint32_t n, std::uint32_t r,
                                        std::uint32_t trunc, std::uint32_t samples,
                                        std::uint64_t seed, const PrimeField& field);

/// Lie quadratic: minimized sampled Lie series against the bracketed
/// Log of 1/(1-nz+rz^2) (bracket applied from degree 1).
ConjectureVerdict check_lie(std::uint32_t n, std::uint32_t r, std::uint32_t trunc,
                            std::uint32_t samples, std::uint64_t seed,
                            const PrimeField& field);

/// Koszulness of sampled quadratic NC algebras against the threshold
/// r <= n^2/4 or r >= 3n^2/4.
ConjectureVerdict check_genkos(std::uint32_t n, std::uint32_t r, std::uint32_t trunc,
                               std::uint32_t samples, std::uint64_t seed,
                               const PrimeField& field);

}  // namespace halg

#endif

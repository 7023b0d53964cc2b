#ifndef IJDOM_GENERATORS_HPP
#define IJDOM_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "ijdom/interval_graph.hpp"
#include "ijdom/reduction_types.hpp"

namespace ijdom {

/// splitmix64: the fixed, named PRNG behind every generator. Instances
/// are reproducible across platforms from (kind, n, seed) alone; bounded
/// draws use the modulo reduction documented in the README.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) { return next() % bound; }

    /// Derives an independent stream; both generators stay usable.
    SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ull); }

  private:
    uint64_t state_;
};

enum class GenKind : uint8_t { kRandomIntervals, kUnitIntervals, kRandom3Sat };

struct GenSpec {
    GenKind kind = GenKind::kRandomIntervals;
    int n = 8;             // interval count, or variable count for formulas
    uint64_t seed = 1;
    int clauses = 4;       // kRandom3Sat only
};

/// n intervals with lefts on the grid {0, 0.1, ..., 99.9} and lengths in
/// {0.1, ..., 30.0}. The grid makes duplicate right endpoints likely, so
/// the tie-breaking rules get exercised; containment occurs regularly.
IntervalSet gen_intervals(const GenSpec& spec);

/// n intervals of length exactly 1 (proper: no strict containment).
IntervalSet gen_unit_intervals(const GenSpec& spec);

/// spec.clauses random 3-clauses over spec.n >= 3 variables; each clause
/// samples three distinct variables and independent polarities.
CnfFormula gen_3sat(const GenSpec& spec);

}  // namespace ijdom

#endif

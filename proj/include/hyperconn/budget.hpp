#pragma once

#include <cstddef>

namespace hyperconn {

/// Limits for the exhaustive searches. Exceeding one throws BudgetExceeded
/// (or yields an UNKNOWN verdict where the operation reports verdicts).
struct Budget {
  std::size_t subsets = 50'000'000;  // candidate cuts tested by strong-cut enumeration
  std::size_t paths = 10'000;        // (u,v)-paths enumerated for path-support hypergraphs
  std::size_t trees = 1'000'000;     // spanning trees tried by exhaustive tree search
  std::size_t orderings = 5'000'000; // partial orderings explored by the interval search
  std::size_t cycles = 5'000'000;    // partial cycles explored by the totally-balanced check
  std::size_t colourings = 5'000'000;  // partial 2-colourings explored
};

}  // namespace hyperconn

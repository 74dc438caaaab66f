#pragma once

#include <cstddef>
#include <cstdint>

#include "fialg/jordan.hpp"
#include "fialg/report.hpp"

namespace fialg {

struct IdentityOptions {
  std::uint64_t seed = 1;
  std::size_t corpus_size = 4;     // random series besides the matrix units
  std::size_t tuple_samples = 12;  // sampled tuples for the 3- and 5-argument identities
  std::size_t w_samples = 2;       // random subsets W per instance, besides the fixed ones
  Exec exec = Exec::parallel;
};

// Every identity the near-sum decomposition rests on, one check each, over a
// seeded corpus of random series and matrix units. Non-Jordan maps are fine
// (construct `iso` with require_jordan = false); failures carry witnesses.
Report verify_identities(const JordanIso& iso, const IdentityOptions& options = {});

}  // namespace fialg

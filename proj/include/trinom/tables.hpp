#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trinom {

// One sweep's worth of per-offset sums for a single prime: values[d] holds
// the accumulated sum for offset d, reduced mod modulus.
struct SumTable {
  uint64_t p = 0;
  uint64_t modulus = 0;
  std::vector<uint64_t> values;
};

// A prefix of an integer sequence reduced mod modulus.  x is set only for
// sequences that carry an evaluation point.
struct SequenceTable {
  std::string name;
  uint64_t modulus = 0;
  std::optional<int64_t> x;
  std::vector<uint64_t> values;
};

}  // namespace trinom

#pragma once

#include <string>
#include <vector>

#include "apolar/ranks.hpp"

namespace apolar {

// One reference-table reproduction. Every entry the engine computes is
// compared against the published constant; disagreements are listed (and a
// handful of known published inconsistencies carry an explanatory note and
// the independently derived expected value).
struct TableDoc {
  int id = 0;
  std::string markdown;
  std::string json_text;
  struct Mismatch {
    std::string where;
    std::string expected;
    std::string actual;
  };
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;
  bool ok() const { return mismatches.empty(); }
};

// Supported ids: 1 (det Hilbert), 2 (perm Hilbert), 3 (det ranks),
// 4 (perm ranks), 5 (contraction Hilbert), 6 (contraction ranks),
// 7 (MonHaf_4 character), 9 (MonHaf_6 character).
TableDoc emit_table(int id, bool extended = false);

bool table_id_supported(int id);

}  // namespace apolar

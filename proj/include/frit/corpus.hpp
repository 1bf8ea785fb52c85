// The fixed, versioned test-field corpus used by every recorded constant.
// Changing any corpus parameter invalidates recorded constants, so the corpus
// carries a version id that all reports embed.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frit/test_fields.hpp"

namespace frit {

inline constexpr std::uint64_t kDefaultSeed = 0x46524954ULL;

struct CorpusEntry {
    std::string name;
    FieldKind kind;
    GridField field;
};

// Five fields: a centered Gaussian (sigma = L/32), three seeded signed bumps,
// a cell-aligned cube indicator (side L/8), a seeded band-limited sum
// (|k|_inf <= 4), and the single mode k = (1, 2) (k = 1 in one dimension).
std::vector<CorpusEntry> standard_corpus(const BoxDomain& box, std::uint64_t seed = kDefaultSeed);

// Identifier stamped into report metadata and file names.
const char* corpus_id();

}  // namespace frit

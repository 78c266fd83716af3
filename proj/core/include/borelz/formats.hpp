#pragma once

#include "borelz/sft.hpp"
#include "borelz/witness.hpp"

#include <iosfwd>
#include <string>

namespace borelz {

// SFT text format:
//
//   alphabet 3
//   0 1
//   2
//
// first line names the alphabet size, each further line is one forbidden
// pattern as space-separated symbols. Patterns may differ in length; they are
// normalized on read. Blank lines and lines starting with '#' are skipped.
Sft read_sft(std::istream& in);
// Writes the normalized forbidden list, one window per line.
void write_sft(std::ostream& out, const Sft& sft);

// Witness format: "gamma n p q" then "g" followed by the p+q-n labels in
// canonical vertex order.
struct WitnessFile {
    std::uint32_t n = 0, p = 0, q = 0;
    Word labeling;
};
WitnessFile read_witness(std::istream& in);
void write_witness(std::ostream& out, const TwoTilesGraph& gamma, std::span<const Symbol> labeling);

// Tile format: "tiles ell", then c1 and c2 each on one line.
struct TileFile {
    std::uint32_t ell = 0;
    Word c1, c2;
};
TileFile read_tiles(std::istream& in);
void write_tiles(std::ostream& out, const TilePair& tiles);

// Which of the two certificate formats a stream holds, judged by its first
// meaningful line: "gamma" or "tiles". Leaves the stream rewound.
std::string sniff_certificate_kind(std::istream& in);

} // namespace borelz

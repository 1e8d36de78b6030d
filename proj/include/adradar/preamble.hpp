#pragma once

#include "adradar/golay.hpp"
#include "adradar/types.hpp"

namespace adradar {

enum class FrameKind { cphy, scphy };

inline constexpr int cef_chip_count = 1152;

/// STF symbol counts per frame format.
int stf_length(FrameKind kind);
inline int preamble_length(FrameKind kind) { return stf_length(kind) + cef_chip_count; }

/// Baseband samples on the chip grid.
struct ChipSequence {
  CVec samples;
  double chip_rate = chip_rate_hz;

  Eigen::Index size() const { return samples.size(); }
  double duration_s() const { return static_cast<double>(samples.size()) / chip_rate; }
};

/// Offsets of the four 256-chip correlation sections within the CEF.
struct CefLayout {
  static constexpr int section_len = 256;
  static constexpr int au_offset = 0;
  static constexpr int bu_offset = 256;
  static constexpr int av_offset = 512;
  static constexpr int bv_offset = 768;
  static constexpr int guard_offset = 1024;
  static constexpr int guard_len = 128;
};

/// Channel-estimation field: Gu512 (= au || bu), Gv512 (= av || bv), then a
/// 128-chip guard repeating the tail of Gv512. Both pairs must be length 256.
ChipSequence build_cef(const GolayPair& pair_u, const GolayPair& pair_v);

/// STF of repeated length-128 Golay blocks with a sign-flipped terminal
/// block, followed by the given CEF.
ChipSequence build_preamble(FrameKind kind, const ChipSequence& cef);

/// The length-128 sequence used for STF filler blocks.
const GolayPair& stf_block_pair();

/// Debug dump, one "re,im" line per sample.
void dump_csv(const ChipSequence& seq, const std::string& path);

}  // namespace adradar

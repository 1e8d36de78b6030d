#include "adradar/preamble.hpp"

#include <fstream>

namespace adradar {

int stf_length(FrameKind kind) {
  switch (kind) {
    case FrameKind::cphy:
      return 6400;
    case FrameKind::scphy:
      return 2176;
  }
  throw std::invalid_argument("unknown frame kind");
}

ChipSequence build_cef(const GolayPair& pair_u, const GolayPair& pair_v) {
  if (pair_u.length() != CefLayout::section_len || pair_v.length() != CefLayout::section_len)
    throw std::invalid_argument("build_cef: pairs must have length 256");

  CVec s(cef_chip_count);
  auto put = [&s](int offset, const IVec& v) {
    for (int i = 0; i < v.size(); ++i) s[offset + i] = Complex(static_cast<double>(v[i]), 0.0);
  };
  put(CefLayout::au_offset, pair_u.a);
  put(CefLayout::bu_offset, pair_u.b);
  put(CefLayout::av_offset, pair_v.a);
  put(CefLayout::bv_offset, pair_v.b);
  // Guard: repeat the last 128 chips of Gv512.
  s.segment(CefLayout::guard_offset, CefLayout::guard_len) =
      s.segment(CefLayout::guard_offset - CefLayout::guard_len, CefLayout::guard_len);
  return ChipSequence{std::move(s)};
}

const GolayPair& stf_block_pair() {
  static const GolayPair pair = generate_golay_pair(128, default_golay_seed(128));
  return pair;
}

ChipSequence build_preamble(FrameKind kind, const ChipSequence& cef) {
  if (cef.size() != cef_chip_count) throw std::invalid_argument("build_preamble: CEF must be 1152 chips");

  const int stf_len = stf_length(kind);
  const int blocks = stf_len / 128;
  const IVec& ga = stf_block_pair().a;

  CVec s(stf_len + cef_chip_count);
  for (int blk = 0; blk < blocks; ++blk) {
    const double sign = (blk == blocks - 1) ? -1.0 : 1.0;
    for (int i = 0; i < 128; ++i)
      s[blk * 128 + i] = Complex(sign * static_cast<double>(ga[i]), 0.0);
  }
  s.segment(stf_len, cef_chip_count) = cef.samples;
  return ChipSequence{std::move(s), cef.chip_rate};
}

void dump_csv(const ChipSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "re,im\n";
  for (Eigen::Index i = 0; i < seq.size(); ++i) {
    out << seq.samples[i].real() << ',' << seq.samples[i].imag() << '\n';
  }
}

}  // namespace adradar

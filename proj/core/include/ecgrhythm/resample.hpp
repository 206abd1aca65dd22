#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ecgrhythm {

/// The upsample/downsample pair used to go from fs_in to 100 Hz:
/// 2/5 for 250 Hz, 5/18 for 360 Hz, 1/1 for 100 Hz.
/// Throws std::invalid_argument for any other rate.
struct ResampleRatio {
  int up = 1;
  int down = 1;
};
ResampleRatio ratio_to_100(int fs_in);

/// Polyphase rational resampling to 100 Hz. The input is expected to be
/// band-limited below 50 Hz already; the interpolation kernel cuts at the
/// output Nyquist to reject zero-stuffing images. Linear phase, delay
/// compensated. Output length is ceil(len * up / down); identity at 100 Hz.
std::vector<double> resample_to_100(std::span<const double> x, int fs_in);

/// Number of output samples resample_to_100 produces for a given input length.
std::size_t resampled_length(std::size_t n_in, ResampleRatio r);

/// Maps an input-grid index range [start, end) onto the output grid so that
/// every output sample inside the mapped range falls inside the input range.
std::size_t remap_index_up(std::size_t idx, ResampleRatio r);  // ceil(idx * up / down)

}  // namespace ecgrhythm

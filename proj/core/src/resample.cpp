#include "ecgrhythm/resample.hpp"

#include <stdexcept>

#include "ecgrhythm/fir.hpp"

namespace ecgrhythm {

ResampleRatio ratio_to_100(int fs_in) {
  switch (fs_in) {
    case 100: return {1, 1};
    case 250: return {2, 5};
    case 360: return {5, 18};
    default:
      throw std::invalid_argument("resample_to_100: unsupported input rate " +
                                  std::to_string(fs_in) + " Hz");
  }
}

std::size_t resampled_length(std::size_t n_in, ResampleRatio r) {
  return (n_in * static_cast<std::size_t>(r.up) + static_cast<std::size_t>(r.down) - 1) /
         static_cast<std::size_t>(r.down);
}

std::size_t remap_index_up(std::size_t idx, ResampleRatio r) {
  return (idx * static_cast<std::size_t>(r.up) + static_cast<std::size_t>(r.down) - 1) /
         static_cast<std::size_t>(r.down);
}

std::vector<double> resample_to_100(std::span<const double> x, int fs_in) {
  const ResampleRatio r = ratio_to_100(fs_in);
  if (r.up == 1 && r.down == 1) return {x.begin(), x.end()};

  // Kernel at the upsampled rate fs_in*up; cutoff at the 50 Hz output
  // Nyquist, gain up to undo the zero-stuffing loss.
  const double fs_up = static_cast<double>(fs_in) * r.up;
  std::vector<double> taps = design_lowpass_fir(fs_up, 44.0, 56.0);
  for (double& t : taps) t *= static_cast<double>(r.up);

  const auto n_taps = static_cast<std::ptrdiff_t>(taps.size());
  const std::ptrdiff_t half = (n_taps - 1) / 2;
  const auto n_in = static_cast<std::ptrdiff_t>(x.size());
  const std::size_t n_out = resampled_length(x.size(), r);

  std::vector<double> y(n_out, 0.0);
  for (std::size_t m = 0; m < n_out; ++m) {
    // center of the output sample on the upsampled grid
    const std::ptrdiff_t t = static_cast<std::ptrdiff_t>(m) * r.down + half;
    // input samples i contribute through tap t - i*up
    std::ptrdiff_t i_lo = (t - n_taps + 1 + r.up - 1) / r.up;  // ceil
    std::ptrdiff_t i_hi = t / r.up;                            // floor
    if (i_lo < 0) i_lo = 0;
    if (i_hi >= n_in) i_hi = n_in - 1;
    double acc = 0.0;
    for (std::ptrdiff_t i = i_lo; i <= i_hi; ++i)
      acc += taps[static_cast<std::size_t>(t - i * r.up)] * x[static_cast<std::size_t>(i)];
    y[m] = acc;
  }
  return y;
}

}  // namespace ecgrhythm

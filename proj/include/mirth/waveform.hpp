#ifndef MIRTH_WAVEFORM_HPP
#define MIRTH_WAVEFORM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "mirth/common.hpp"

namespace mirth {

enum class Layout { mono, stereo, surround_5_1 };

inline std::size_t channel_count(Layout l) {
  switch (l) {
    case Layout::mono: return 1;
    case Layout::stereo: return 2;
    case Layout::surround_5_1: return 6;
  }
  return 0;
}

inline Layout layout_from_channel_count(std::size_t n) {
  switch (n) {
    case 1: return Layout::mono;
    case 2: return Layout::stereo;
    case 6: return Layout::surround_5_1;
    default:
      throw LayoutError("unsupported channel count " + std::to_string(n) +
                        " (expected 1, 2 or 6)");
  }
}

/// Multi-channel sampled audio, nominal amplitude range [-1, 1].
struct Waveform {
  std::vector<std::vector<float>> channels;
  int sample_rate_hz = 0;
  Layout layout = Layout::mono;

  std::size_t frames() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(frames()) / sample_rate_hz
               : 0.0;
  }
};

inline Waveform make_mono(std::vector<float> samples, int sample_rate_hz) {
  Waveform w;
  w.channels.push_back(std::move(samples));
  w.sample_rate_hz = sample_rate_hz;
  w.layout = Layout::mono;
  return w;
}

inline void validate(const Waveform& w) {
  if (w.sample_rate_hz <= 0) throw DataError("waveform: sample rate must be > 0");
  if (channel_count(w.layout) != w.channels.size())
    throw LayoutError("waveform: layout does not match channel count");
  for (const auto& ch : w.channels)
    if (ch.size() != w.frames())
      throw DataError("waveform: channels differ in length");
}

/// Mono mixdown (unweighted mean across channels).
inline Waveform mixdown(const Waveform& w) {
  if (w.layout == Layout::mono) return w;
  std::vector<float> out(w.frames(), 0.0f);
  for (const auto& ch : w.channels)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += ch[i];
  const float inv = 1.0f / static_cast<float>(w.channels.size());
  for (float& s : out) s *= inv;
  return make_mono(std::move(out), w.sample_rate_hz);
}

/// Removes centered dialogue. Stereo: L - R cancels anything mixed equally
/// into both channels. 5.1: drop the center (voice) channel and average the
/// remaining five. Mono input has nothing to subtract.
inline Waveform remove_voice(const Waveform& w) {
  validate(w);
  if (w.layout == Layout::mono)
    throw LayoutError("remove_voice: mono input has no voice channel to cancel");
  std::vector<float> out(w.frames());
  if (w.layout == Layout::stereo) {
    const auto& l = w.channels[0];
    const auto& r = w.channels[1];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = l[i] - r[i];
  } else {
    // WAV 5.1 order: FL FR FC LFE BL BR; FC (index 2) carries the dialogue.
    constexpr std::size_t kCenter = 2;
    for (std::size_t i = 0; i < out.size(); ++i) {
      float acc = 0.0f;
      for (std::size_t c = 0; c < 6; ++c)
        if (c != kCenter) acc += w.channels[c][i];
      out[i] = acc / 5.0f;
    }
  }
  return make_mono(std::move(out), w.sample_rate_hz);
}

namespace detail {

inline double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

/// Zeroth-order modified Bessel function (series form), for the Kaiser window.
inline double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

}  // namespace detail

struct ResampleOptions {
  bool linear = false;     // fallback mode; default is windowed sinc
  int taps = 32;           // kernel support in output-rate samples
  double kaiser_beta = 8.0;
};

/// Band-limited sample-rate conversion (Kaiser-windowed sinc). The kernel is
/// renormalized per output sample so constants map to constants and edge
/// droop stays small. target == source returns the input unchanged.
inline Waveform resample(const Waveform& w, int target_hz,
                         const ResampleOptions& opt = {}) {
  validate(w);
  if (target_hz <= 0) throw DataError("resample: target rate must be > 0");
  if (target_hz == w.sample_rate_hz) return w;

  const double ratio = static_cast<double>(w.sample_rate_hz) / target_hz;
  const std::size_t in_len = w.frames();
  const std::size_t out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(in_len) * target_hz / w.sample_rate_hz));

  Waveform out;
  out.sample_rate_hz = target_hz;
  out.layout = w.layout;
  out.channels.resize(w.channels.size());

  if (opt.linear) {
    for (std::size_t c = 0; c < w.channels.size(); ++c) {
      const auto& src = w.channels[c];
      auto& dst = out.channels[c];
      dst.resize(out_len);
      for (std::size_t n = 0; n < out_len; ++n) {
        const double p = n * ratio;
        const std::size_t i0 = std::min<std::size_t>(
            static_cast<std::size_t>(p), in_len ? in_len - 1 : 0);
        const std::size_t i1 = std::min(i0 + 1, in_len ? in_len - 1 : 0);
        const double frac = p - static_cast<double>(i0);
        dst[n] = static_cast<float>((1.0 - frac) * src[i0] + frac * src[i1]);
      }
    }
    return out;
  }

  const double cutoff = std::min(1.0, 1.0 / ratio);  // of source Nyquist
  const double half_width = (opt.taps / 2.0) * std::max(1.0, ratio);
  const double inv_i0_beta = 1.0 / detail::bessel_i0(opt.kaiser_beta);

  for (std::size_t c = 0; c < w.channels.size(); ++c) {
    const auto& src = w.channels[c];
    auto& dst = out.channels[c];
    dst.resize(out_len);
    for (std::size_t n = 0; n < out_len; ++n) {
      const double p = n * ratio;
      const long i_lo = static_cast<long>(std::ceil(p - half_width));
      const long i_hi = static_cast<long>(std::floor(p + half_width));
      double acc = 0.0, wsum = 0.0;
      for (long i = std::max(0L, i_lo);
           i <= std::min(static_cast<long>(in_len) - 1, i_hi); ++i) {
        const double x = static_cast<double>(i) - p;
        const double t = x / half_width;
        const double win =
            detail::bessel_i0(opt.kaiser_beta * std::sqrt(1.0 - t * t)) *
            inv_i0_beta;
        const double h = cutoff * detail::sinc(cutoff * x) * win;
        acc += h * src[static_cast<std::size_t>(i)];
        wsum += h;
      }
      dst[n] = wsum > 1e-9 ? static_cast<float>(acc / wsum) : 0.0f;
    }
  }
  return out;
}

/// Circular shift by whole samples; positive shifts move content later.
inline std::vector<float> circular_shift(const std::vector<float>& x,
                                         long shift) {
  const long n = static_cast<long>(x.size());
  std::vector<float> out(x.size());
  if (n == 0) return out;
  long s = ((shift % n) + n) % n;
  for (long i = 0; i < n; ++i) out[(i + s) % n] = x[i];
  return out;
}

}  // namespace mirth

#endif  // MIRTH_WAVEFORM_HPP

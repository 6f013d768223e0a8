#pragma once

#include <array>
#include <cstdint>

namespace kdesign {

/// Mixes two 64-bit words into a stream identifier (splitmix64 finalizer).
/// Used to derive child stream ids from a parent id and a local index.
std::uint64_t mix_stream(std::uint64_t parent, std::uint64_t index);

/// Counter-based random stream (Philox4x32-10).
///
/// A generator is identified by (seed, stream): the seed is the 64-bit key,
/// the stream id occupies the upper counter words, and the draw position the
/// lower ones. Distinct streams under the same seed are statistically
/// independent, so every logical consumer (a matrix entry, a coupling, a
/// Monte Carlo chunk) can own a stream with a stable identity:
///
///     Philox rng(seed, tag);            // one stream per purpose
///     Philox child = rng.substream(i);  // one stream per coupling i
///
/// Same (seed, stream) always reproduces the same draw sequence, on any
/// platform, regardless of what other streams were consumed.
class Philox {
 public:
  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0);

  /// Child stream with id mix_stream(this->stream(), id); draw position 0.
  Philox substream(std::uint64_t id) const;

  std::uint64_t stream() const { return stream_; }
  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53-bit resolution.
  double next_unit();
  /// Uniform on (0, 1]; safe as a log() argument.
  double next_unit_open();
  /// Uniform angle on [0, 2*pi).
  double next_angle();
  /// Standard normal via Box-Muller (one spare value cached).
  double next_gaussian();

  /// One raw Philox4x32-10 block; exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(
      const std::array<std::uint32_t, 4>& counter,
      const std::array<std::uint32_t, 2>& key);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffer_pos_ = 4;
  double gauss_spare_ = 0.0;
  bool has_gauss_spare_ = false;
};

/// Well-known stream tags so independent subsystems never collide.
namespace stream_tag {
inline constexpr std::uint64_t kGueEntries = 0x01;
inline constexpr std::uint64_t kCsykCouplings = 0x02;
inline constexpr std::uint64_t kRspinExchange = 0x03;
inline constexpr std::uint64_t kRspinField = 0x04;
inline constexpr std::uint64_t kTimeSamples = 0x05;
inline constexpr std::uint64_t kPhaseSamples = 0x06;
inline constexpr std::uint64_t kHaarGinibre = 0x07;
inline constexpr std::uint64_t kModelMember = 0x08;
inline constexpr std::uint64_t kGridPoint = 0x09;
}  // namespace stream_tag

}  // namespace kdesign

#include "kdesign/rng.hpp"

#include <cmath>
#include <numbers>

namespace kdesign {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline std::uint64_t splitmix_fin(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t mix_stream(std::uint64_t parent, std::uint64_t index) {
  return splitmix_fin(parent + 0x9E3779B97F4A7C15ull * (index + 1));
}

Philox::Philox(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {}

Philox Philox::substream(std::uint64_t id) const {
  return Philox(seed_, mix_stream(stream_, id));
}

std::array<std::uint32_t, 4> Philox::block(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> ctr = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ k[0], lo1, hi0 ^ ctr[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return ctr;
}

void Philox::refill() {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(index_),
      static_cast<std::uint32_t>(index_ >> 32),
      static_cast<std::uint32_t>(stream_),
      static_cast<std::uint32_t>(stream_ >> 32)};
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed_),
      static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = block(counter, key);
  buffer_pos_ = 0;
  ++index_;
}

std::uint64_t Philox::next_u64() {
  if (buffer_pos_ > 2) refill();
  const std::uint64_t lo = buffer_[buffer_pos_];
  const std::uint64_t hi = buffer_[buffer_pos_ + 1];
  buffer_pos_ += 2;
  return lo | (hi << 32);
}

double Philox::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Philox::next_unit_open() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double Philox::next_angle() {
  return 2.0 * std::numbers::pi * next_unit();
}

double Philox::next_gaussian() {
  if (has_gauss_spare_) {
    has_gauss_spare_ = false;
    return gauss_spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(next_unit_open()));
  const double theta = next_angle();
  gauss_spare_ = r * std::sin(theta);
  has_gauss_spare_ = true;
  return r * std::cos(theta);
}

}  // namespace kdesign

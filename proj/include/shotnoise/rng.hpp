#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace shotnoise {

// Counter-based generator (Philox4x32-10). A stream is addressed by
// (seed, stream) and produces the same sequence no matter what any other
// stream has consumed, so parallel replications stay reproducible and
// independent of scheduling order.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() noexcept {
    if (word_ >= 4) refill();
    const std::uint64_t lo = block_[word_];
    const std::uint64_t hi = block_[word_ + 1];
    word_ += 2;
    return lo | (hi << 32);
  }

  // Uniform on [0,1) with 53-bit resolution.
  double u01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0,1); safe under log and power transforms.
  double u01_open() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard exponential, strictly positive.
  double exponential() noexcept { return -std::log(u01_open()); }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() noexcept {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(u01_open()));
    const double a = 2.0 * kPi * u01();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  void refill() noexcept {
    std::array<std::uint32_t, 4> x = {
        static_cast<std::uint32_t>(counter_),
        static_cast<std::uint32_t>(counter_ >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ULL * x[0];
      const std::uint64_t p1 = 0xCD9E8D57ULL * x[2];
      x = {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k0,
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k1,
           static_cast<std::uint32_t>(p0)};
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    block_ = x;
    ++counter_;
    word_ = 0;
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int word_ = 4;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Stream addressing: the top 16 bits name the consumer (experiment phase),
// the low 48 index replications within it.
constexpr std::uint64_t stream_index(std::uint16_t tag,
                                     std::uint64_t index) noexcept {
  return (static_cast<std::uint64_t>(tag) << 48) |
         (index & 0xFFFFFFFFFFFFULL);
}

}  // namespace shotnoise

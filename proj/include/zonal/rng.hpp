#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace zonal {

/// Philox4x32-10 counter-based generator. The key is the seed and the upper
/// counter words select a stream, so Philox(seed, i) is the private stream of
/// sample i. Satisfies UniformRandomBitGenerator.
class Philox {
 public:
  using result_type = std::uint32_t;

  Philox(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// The ten-round bijection on one counter block.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key);

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 4;
};

}  // namespace zonal

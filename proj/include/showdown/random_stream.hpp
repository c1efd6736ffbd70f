#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace showdown {

/// Philox4x32-10 counter-based generator.
///
/// The 64-bit seed is the key; the 128-bit counter is (block index, stream id).
/// Two streams with the same seed and different ids never share a block, and
/// a stream's output depends only on (seed, stream id), never on what other
/// streams have drawn. Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next_u64(); }
  std::uint64_t next_u64();

  // Uniform on (0, 1]: 53 random bits, never exactly 0.
  double next_uniform();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // The raw bijection, exposed for known-answer tests.
  static Block philox(Block counter, Key key);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  int used_ = 4;  // 32-bit words consumed from buffer_
};

}  // namespace showdown

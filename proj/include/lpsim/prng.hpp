#pragma once
// Counter-based PRNG (Philox-4x64, 10 rounds). Every draw is addressed by a
// 64-bit signed index within a (seed, stream) pair, so draw k of a stream
// never depends on how many draws were consumed before it. That makes
// replicate ensembles order-independent and lets different constructions
// share the same innovations by sharing indices.

#include <array>
#include <cstdint>

namespace lpsim::rng {

inline constexpr const char* kGeneratorId = "philox4x64-10";

namespace detail {

inline void mul_hi_lo(std::uint64_t a, std::uint64_t b,
                      std::uint64_t& hi, std::uint64_t& lo) {
#if defined(__SIZEOF_INT128__)
  __extension__ using uint128 = unsigned __int128;
  const uint128 p = static_cast<uint128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
#else
  const std::uint64_t a_lo = a & 0xFFFFFFFFull, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFull, b_hi = b >> 32;
  const std::uint64_t t = a_lo * b_hi + ((a_lo * b_lo) >> 32);
  const std::uint64_t u = a_hi * b_lo + (t & 0xFFFFFFFFull);
  hi = a_hi * b_hi + (t >> 32) + (u >> 32);
  lo = a * b;
#endif
}

}  // namespace detail

inline std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> ctr,
                                               std::array<std::uint64_t, 2> key) {
  constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
  constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
  constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
  constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    detail::mul_hi_lo(kMul0, ctr[0], hi0, lo0);
    detail::mul_hi_lo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

// One logical stream of uniforms, keyed by (seed, stream) and addressed by a
// signed draw index. Negative indices wrap into the upper half of the 128-bit
// counter space, so index ranges like [1-N, n+N] are well-defined.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}

  std::array<std::uint64_t, 4> block_at(std::int64_t block) const {
    const std::uint64_t lo = static_cast<std::uint64_t>(block);
    const std::uint64_t hi = block < 0 ? ~0ull : 0ull;
    return philox4x64({lo, hi, 0ull, 0ull}, key_);
  }

  std::uint64_t raw_at(std::int64_t index) const {
    return block_at(index >> 2)[index & 3];
  }

  // Uniform on the open interval (0,1): 2^53 equispaced values, symmetric
  // about 1/2, endpoints excluded.
  double unit_at(std::int64_t index) const {
    return to_unit(raw_at(index));
  }

  static double to_unit(std::uint64_t raw) {
    return (static_cast<double>(raw >> 11) + 0.5) * 0x1.0p-53;
  }

  // Visits f(index, unit) for index in [first, first+count); one Philox block
  // serves four consecutive draws.
  template <class F>
  void for_each_unit(std::int64_t first, std::int64_t count, F&& f) const {
    std::int64_t index = first;
    const std::int64_t end = first + count;
    while (index < end) {
      const auto block = block_at(index >> 2);
      for (int w = static_cast<int>(index & 3); w < 4 && index < end; ++w, ++index) {
        f(index, to_unit(block[w]));
      }
    }
  }

 private:
  std::array<std::uint64_t, 2> key_;
};

}  // namespace lpsim::rng

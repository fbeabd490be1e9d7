#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace hdlt {

/// Philox4x64-10 counter-based generator (Salmon, Moraes, Dror and Shaw,
/// "Parallel random numbers: as easy as 1, 2, 3", SC'11).
///
/// A stream is addressed by (seed, stream_hi, stream_lo): the cipher key is
/// (seed, stream_hi) and the counter starts at (0, stream_lo, 0, 0), with
/// word 0 advancing once per 4-word block. Distinct addresses never collide,
/// so per-replication streams can be drawn in any order, on any number of
/// workers, with identical output. The simulation harness uses
/// (seed, cell_id, replicate_index).
class Philox4x64 {
 public:
  explicit Philox4x64(uint64_t seed, uint64_t stream_hi = 0,
                      uint64_t stream_lo = 0)
      : key_{seed, stream_hi}, ctr_{0, stream_lo, 0, 0} {}

  uint64_t next_u64() {
    if (pos_ == 4) refill();
    return buf_[static_cast<size_t>(pos_++)];
  }

  /// Uniform on [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
  static constexpr uint64_t kMul1 = 0xCA5A826395121157ull;
  static constexpr uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
  static constexpr uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

  static void mulhilo(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<uint64_t>(prod >> 64);
    lo = static_cast<uint64_t>(prod);
  }

  void refill() {
    std::array<uint64_t, 4> x = ctr_;
    uint64_t k0 = key_[0];
    uint64_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      uint64_t hi0, lo0, hi1, lo1;
      mulhilo(kMul0, x[0], hi0, lo0);
      mulhilo(kMul1, x[2], hi1, lo1);
      x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    buf_ = x;
    pos_ = 0;
    ++ctr_[0];
  }

  std::array<uint64_t, 2> key_;
  std::array<uint64_t, 4> ctr_;
  std::array<uint64_t, 4> buf_{};
  int pos_ = 4;
};

/// Standard normal deviates via Marsaglia's polar method on a Philox stream.
/// The rejection loop consumes a variable number of uniforms, which is fine
/// because every stream is privately owned.
class NormalStream {
 public:
  explicit NormalStream(uint64_t seed, uint64_t stream_hi = 0,
                        uint64_t stream_lo = 0)
      : gen_(seed, stream_hi, stream_lo) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * gen_.next_double() - 1.0;
      v = 2.0 * gen_.next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  Philox4x64& raw() { return gen_; }

 private:
  Philox4x64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hdlt

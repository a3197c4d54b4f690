#pragma once

/**
 * @file scramble.hpp
 * @brief Blockwise byte scrambler keyed by an orthogonal transform.
 *
 * NOT A CIPHER. The transform is linear, so a handful of known
 * plaintext/ciphertext blocks recovers the key. This exists to exercise the
 * transform on real data, nothing more.
 *
 * Encoding. Input bytes are read as an MSB-first bitstream and cut into
 * k-bit digits, k = floor(log2 m), so every digit is < 2^k <= m. The last
 * partial digit is zero-padded on the right, then whole zero digits pad the
 * sequence to a multiple of the block length 2n. Each block is transformed
 * and every residue is written big-endian in w = ceil(bits(m-1) / 8) bytes.
 *
 * Frame layout (bit-exact):
 *
 *     offset 0   4 bytes   "NHT1"
 *     offset 4   8 bytes   original byte length, big-endian unsigned
 *     offset 12  ...       body, blocks of 2n residues, w bytes each
 */

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nht/core.hpp"
#include "nht/errors.hpp"
#include "nht/modular.hpp"

namespace nht {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::array<std::uint8_t, 4> kFrameMagic{'N', 'H', 'T', '1'};
inline constexpr std::size_t kFrameHeaderBytes = 12;

/// Bits per digit: floor(log2 m).
inline unsigned digit_bits(Modulus m) { return static_cast<unsigned>(std::bit_width(m.value())) - 1; }

/// Bytes per serialized residue: ceil(bits(m - 1) / 8).
inline std::size_t residue_width(Modulus m) {
  return (static_cast<std::size_t>(std::bit_width(m.value() - 1)) + 7) / 8;
}

/// A spec accepted for scrambling: orthogonal, modulus at least 3.
class ScrambleKey {
 public:
  explicit ScrambleKey(NhtSpec spec) : spec_(std::move(spec)) {
    if (spec_.modulus().value() < 3) throw InvalidSpec("scrambling needs a modulus of at least 3");
    if (!is_valid(spec_)) throw InvalidSpec("scrambling needs an orthogonal spec (N N^T = I)");
  }

  [[nodiscard]] const NhtSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t block_size() const noexcept { return spec_.size(); }
  [[nodiscard]] Modulus modulus() const noexcept { return spec_.modulus(); }

 private:
  NhtSpec spec_;
};

struct Frame {
  std::uint64_t byte_length = 0;
  std::vector<ResidueVector> blocks;
};

/// Packs bytes into k-bit digits, then zero-pads to a multiple of `block`.
inline std::vector<std::uint64_t> bytes_to_digits(std::span<const std::uint8_t> data, Modulus m,
                                                  std::size_t block = 1) {
  if (m.value() < 3) throw InvalidModulus("digit packing needs a modulus of at least 3");
  const unsigned k = digit_bits(m);
  std::vector<std::uint64_t> digits;
  digits.reserve((data.size() * 8 + k - 1) / k + block);
  std::uint64_t acc = 0;
  unsigned have = 0;
  for (auto byte : data) {
    acc = (acc << 8U) | byte;
    have += 8;
    while (have >= k) {
      have -= k;
      digits.push_back((acc >> have) & ((std::uint64_t{1} << k) - 1));
    }
    acc &= (std::uint64_t{1} << have) - 1;
  }
  if (have > 0) digits.push_back((acc << (k - have)) & ((std::uint64_t{1} << k) - 1));
  if (block > 1) {
    while (digits.size() % block != 0) digits.push_back(0);
  }
  return digits;
}

/// Inverse of bytes_to_digits for `byte_length` bytes. Anything beyond the
/// payload must be zero, otherwise the digits were not produced by packing.
inline Bytes digits_to_bytes(std::span<const std::uint64_t> digits, Modulus m, std::uint64_t byte_length) {
  const unsigned k = digit_bits(m);
  const std::uint64_t needed_digits = (byte_length * 8 + k - 1) / k;
  if (digits.size() < needed_digits) throw KeyMismatch("not enough digits for the recorded byte length");
  Bytes out;
  out.reserve(byte_length);
  std::uint64_t acc = 0;
  unsigned have = 0;
  std::size_t d = 0;
  while (out.size() < byte_length) {
    while (have < 8) {
      const std::uint64_t digit = digits[d++];
      if (digit >> k) throw KeyMismatch("digit " + std::to_string(digit) + " exceeds " + std::to_string(k) + " bits");
      acc = (acc << k) | digit;
      have += k;
    }
    have -= 8;
    out.push_back(static_cast<std::uint8_t>(acc >> have));
    acc &= (std::uint64_t{1} << have) - 1;
  }
  if (acc != 0) throw KeyMismatch("nonzero padding bits");
  for (; d < digits.size(); ++d) {
    if (digits[d] != 0) throw KeyMismatch("nonzero padding digits");
  }
  return out;
}

/// Exact body size in bytes for an input of `byte_length` bytes.
inline std::uint64_t body_length(std::uint64_t byte_length, const ScrambleKey& key) {
  const unsigned k = digit_bits(key.modulus());
  const std::uint64_t digits = (8 * byte_length + k - 1) / k;
  const std::uint64_t blocks = (digits + key.block_size() - 1) / key.block_size();
  return blocks * key.block_size() * residue_width(key.modulus());
}

inline Frame scramble(std::span<const std::uint8_t> data, const ScrambleKey& key) {
  const Modulus m = key.modulus();
  const std::size_t size = key.block_size();
  const auto digits = bytes_to_digits(data, m, size);
  Frame frame{data.size(), {}};
  frame.blocks.reserve(digits.size() / size);
  for (std::size_t off = 0; off < digits.size(); off += size) {
    ResidueVector block(m, std::vector<std::uint64_t>(digits.begin() + off, digits.begin() + off + size));
    frame.blocks.push_back(forward_parity_split(key.spec(), block));
  }
  return frame;
}

inline Bytes descramble(const Frame& frame, const ScrambleKey& key) {
  const Modulus m = key.modulus();
  const std::size_t size = key.block_size();
  const std::uint64_t expected_blocks = body_length(frame.byte_length, key) / (size * residue_width(m));
  if (frame.blocks.size() != expected_blocks) {
    throw KeyMismatch("frame holds " + std::to_string(frame.blocks.size()) + " blocks, key geometry expects " +
                      std::to_string(expected_blocks));
  }
  std::vector<std::uint64_t> digits;
  digits.reserve(frame.blocks.size() * size);
  for (const auto& block : frame.blocks) {
    if (block.modulus() != m || block.size() != size) throw KeyMismatch("block geometry differs from the key");
    const auto plain = inverse(key.spec(), block);
    digits.insert(digits.end(), plain.entries().begin(), plain.entries().end());
  }
  return digits_to_bytes(digits, m, frame.byte_length);
}

inline Bytes encode_frame(const Frame& frame, Modulus m) {
  const std::size_t w = residue_width(m);
  Bytes out(kFrameMagic.begin(), kFrameMagic.end());
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(frame.byte_length >> shift));
  for (const auto& block : frame.blocks) {
    for (auto r : block.entries()) {
      for (std::size_t b = w; b-- > 0;) out.push_back(static_cast<std::uint8_t>(r >> (8 * b)));
    }
  }
  return out;
}

/// Splits a serialized frame into blocks using the key's block size and width.
inline Frame decode_frame(std::span<const std::uint8_t> bytes, const ScrambleKey& key) {
  if (bytes.size() < kFrameHeaderBytes) throw MalformedFrame("frame shorter than its 12-byte header");
  if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), bytes.begin())) throw MalformedFrame("bad magic");
  Frame frame;
  for (std::size_t i = 4; i < kFrameHeaderBytes; ++i) frame.byte_length = (frame.byte_length << 8U) | bytes[i];

  const Modulus m = key.modulus();
  const std::size_t w = residue_width(m);
  const std::size_t size = key.block_size();
  const auto body = bytes.subspan(kFrameHeaderBytes);
  if (body.size() % (size * w) != 0) {
    throw MalformedFrame("body of " + std::to_string(body.size()) + " bytes is not a multiple of " +
                         std::to_string(size * w));
  }
  frame.blocks.reserve(body.size() / (size * w));
  for (std::size_t off = 0; off < body.size(); off += size * w) {
    std::vector<std::uint64_t> entries(size);
    for (std::size_t i = 0; i < size; ++i) {
      std::uint64_t r = 0;
      for (std::size_t b = 0; b < w; ++b) r = (r << 8U) | body[off + i * w + b];
      if (r >= m.value()) throw MalformedFrame("residue " + std::to_string(r) + " is not below the modulus");
      entries[i] = r;
    }
    frame.blocks.emplace_back(m, std::move(entries));
  }
  return frame;
}

inline Bytes scramble_bytes(std::span<const std::uint8_t> data, const ScrambleKey& key) {
  return encode_frame(scramble(data, key), key.modulus());
}

inline Bytes descramble_bytes(std::span<const std::uint8_t> bytes, const ScrambleKey& key) {
  return descramble(decode_frame(bytes, key), key);
}

}  // namespace nht

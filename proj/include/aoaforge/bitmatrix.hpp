#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace aoaforge {

// Square bit matrix used for reachability and successor-set work.
// Row-major, 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_(n * ((n + 63) / 64), 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t row, std::size_t col) {
    words_[row * stride() + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  bool get(std::size_t row, std::size_t col) const {
    return (words_[row * stride() + col / 64] >> (col % 64)) & 1u;
  }

  // row |= other_row
  void or_row(std::size_t row, std::size_t other_row) {
    const std::size_t s = stride();
    std::uint64_t* dst = words_.data() + row * s;
    const std::uint64_t* src = words_.data() + other_row * s;
    for (std::size_t w = 0; w < s; ++w) dst[w] |= src[w];
  }

  bool rows_equal(std::size_t a, std::size_t b) const {
    const std::size_t s = stride();
    const std::uint64_t* pa = words_.data() + a * s;
    const std::uint64_t* pb = words_.data() + b * s;
    for (std::size_t w = 0; w < s; ++w)
      if (pa[w] != pb[w]) return false;
    return true;
  }

  bool rows_intersect(std::size_t a, std::size_t b) const {
    const std::size_t s = stride();
    const std::uint64_t* pa = words_.data() + a * s;
    const std::uint64_t* pb = words_.data() + b * s;
    for (std::size_t w = 0; w < s; ++w)
      if (pa[w] & pb[w]) return true;
    return false;
  }

  // true iff row a has a bit that row b lacks
  bool row_minus_nonempty(std::size_t a, std::size_t b) const {
    const std::size_t s = stride();
    const std::uint64_t* pa = words_.data() + a * s;
    const std::uint64_t* pb = words_.data() + b * s;
    for (std::size_t w = 0; w < s; ++w)
      if (pa[w] & ~pb[w]) return true;
    return false;
  }

  std::size_t count_row(std::size_t row) const {
    const std::size_t s = stride();
    const std::uint64_t* p = words_.data() + row * s;
    std::size_t total = 0;
    for (std::size_t w = 0; w < s; ++w) total += std::popcount(p[w]);
    return total;
  }

 private:
  std::size_t stride() const { return (n_ + 63) / 64; }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace aoaforge

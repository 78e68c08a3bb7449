#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace fa {

using Triple = std::array<int, 3>;

/// Dense ternary relation over {0..n-1}, with per-pair image lists kept in
/// sync for fast iteration.
class TernaryRelation {
 public:
  TernaryRelation() = default;
  explicit TernaryRelation(int n)
      : n_(n), bits_(static_cast<size_t>(n) * n * n, 0), images_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }

  bool contains(int x, int y, int z) const { return bits_[index(x, y, z)] != 0; }

  void insert(int x, int y, int z) {
    auto& bit = bits_[index(x, y, z)];
    if (bit) return;
    bit = 1;
    auto& img = images_[static_cast<size_t>(x) * n_ + y];
    img.insert(std::upper_bound(img.begin(), img.end(), z), z);
  }

  void erase(int x, int y, int z) {
    auto& bit = bits_[index(x, y, z)];
    if (!bit) return;
    bit = 0;
    auto& img = images_[static_cast<size_t>(x) * n_ + y];
    img.erase(std::lower_bound(img.begin(), img.end(), z));
  }

  /// Sorted list of z with (x, y, z) in the relation.
  const std::vector<int>& image(int x, int y) const {
    return images_[static_cast<size_t>(x) * n_ + y];
  }

  bool empty(int x, int y) const { return image(x, y).empty(); }

  /// All triples in lexicographic order.
  std::vector<Triple> triples() const {
    std::vector<Triple> out;
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z : image(x, y)) out.push_back({x, y, z});
    return out;
  }

  size_t count() const {
    size_t c = 0;
    for (const auto& img : images_) c += img.size();
    return c;
  }

  friend bool operator==(const TernaryRelation& a, const TernaryRelation& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  size_t index(int x, int y, int z) const {
    return (static_cast<size_t>(x) * n_ + y) * n_ + z;
  }

  int n_ = 0;
  std::vector<std::uint8_t> bits_;
  std::vector<std::vector<int>> images_;
};

}  // namespace fa

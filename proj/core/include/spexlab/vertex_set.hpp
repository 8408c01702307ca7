#ifndef SPEXLAB_VERTEX_SET_HPP
#define SPEXLAB_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spexlab {

using Vertex = int;

// Dense bit set over vertex labels 0..size-1. Used for adjacency rows and
// for visited/allowed masks in the backtracking searches.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static VertexSet full(int size) {
    VertexSet s(size);
    for (Vertex v = 0; v < size; ++v) s.insert(v);
    return s;
  }

  int size() const { return size_; }

  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Number of elements shared with `other` (same universe size).
  int intersection_count(const VertexSet& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  // Calls f(v) for each member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace spexlab

#endif  // SPEXLAB_VERTEX_SET_HPP

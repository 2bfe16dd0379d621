#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mcds/errors.hpp"

namespace mcds {

using Vertex = std::uint32_t;

/// A subset of {0, ..., order-1}. Backed by 64-bit words; the order is part of
/// the value so that sets from different graphs never compare equal.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t order);
  VertexSet(std::size_t order, std::initializer_list<Vertex> members);
  VertexSet(std::size_t order, const std::vector<Vertex>& members);

  /// Builds a set from the low `order` bits of `mask` (order <= 64).
  static VertexSet from_mask(std::size_t order, std::uint64_t mask);
  static VertexSet full(std::size_t order);

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] bool empty() const noexcept;

  void insert(Vertex v);
  void erase(Vertex v);

  [[nodiscard]] VertexSet complement() const;
  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
  [[nodiscard]] bool intersects(const VertexSet& other) const;

  /// Low 64 bits; throws if the order exceeds 64.
  [[nodiscard]] std::uint64_t to_mask() const;
  [[nodiscard]] std::vector<Vertex> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Sorted member list, e.g. "{0,3,5}".
  [[nodiscard]] std::string to_string() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
      }
    }
  }

 private:
  void check(Vertex v) const;
  void check_same_order(const VertexSet& other) const;

  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mcds

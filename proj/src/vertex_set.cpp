#include "mcds/vertex_set.hpp"

#include <bit>

namespace mcds {

namespace {

std::size_t word_count(std::size_t order) { return (order + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t order) : order_(order), words_(word_count(order), 0) {}

VertexSet::VertexSet(std::size_t order, std::initializer_list<Vertex> members) : VertexSet(order) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t order, const std::vector<Vertex>& members) : VertexSet(order) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t order, std::uint64_t mask) {
  if (order > 64) throw RangeError("VertexSet::from_mask: order exceeds 64");
  if (order < 64 && (mask >> order) != 0) throw RangeError("VertexSet::from_mask: mask has bits beyond order");
  VertexSet s(order);
  if (order > 0) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::full(std::size_t order) { return VertexSet(order).complement(); }

void VertexSet::check(Vertex v) const {
  if (v >= order_) {
    throw RangeError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
  }
}

void VertexSet::check_same_order(const VertexSet& other) const {
  if (other.order_ != order_) {
    throw RangeError("vertex sets of different order (" + std::to_string(order_) + " vs " +
                     std::to_string(other.order_) + ")");
  }
}

bool VertexSet::contains(Vertex v) const {
  check(v);
  return ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet VertexSet::complement() const {
  VertexSet out(order_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  if (const std::size_t tail = order_ % 64; tail != 0) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

std::uint64_t VertexSet::to_mask() const {
  if (order_ > 64) throw RangeError("VertexSet::to_mask: order exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace mcds

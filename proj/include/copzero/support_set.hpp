#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace copzero {

/// Subset of {0..p-1} as a fixed-width bit mask (bit i = index i).
/// Doubles as the incidence vector a(P̄): comparisons are by mask value,
/// which orders equal-cardinality sets colexicographically.
class SupportSet {
 public:
  static constexpr int max_dim = 64;

  constexpr SupportSet() = default;
  static constexpr SupportSet from_mask(std::uint64_t bits) {
    SupportSet s;
    s.bits_ = bits;
    return s;
  }
  static SupportSet of(std::initializer_list<int> indices) {
    SupportSet s;
    for (int i : indices) s.add(i);
    return s;
  }
  static SupportSet full(int n) {
    if (n == 0) return {};
    check_index(n - 1);
    return from_mask(~std::uint64_t{0} >> (64 - n));
  }

  void add(int i) {
    check_index(i);
    bits_ |= std::uint64_t{1} << i;
  }
  void remove(int i) {
    check_index(i);
    bits_ &= ~(std::uint64_t{1} << i);
  }
  bool contains(int i) const {
    return i >= 0 && i < max_dim && (bits_ >> i) & 1;
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t mask() const { return bits_; }

  bool subset_of(SupportSet o) const { return (bits_ & o.bits_) == bits_; }
  SupportSet set_union(SupportSet o) const { return from_mask(bits_ | o.bits_); }
  SupportSet intersect(SupportSet o) const { return from_mask(bits_ & o.bits_); }
  SupportSet minus(SupportSet o) const { return from_mask(bits_ & ~o.bits_); }

  int min_index() const {
    if (empty()) throw std::logic_error("min_index of empty set");
    return std::countr_zero(bits_);
  }

  std::vector<int> indices() const {  // ascending, 0-based
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  std::string str() const {  // 1-based, e.g. "{1,2}"
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(SupportSet, SupportSet) = default;
  friend std::strong_ordering operator<=>(SupportSet a, SupportSet b) {
    return a.bits_ <=> b.bits_;
  }

  // (cardinality, mask) order used for zero indexing.
  static bool size_mask_less(SupportSet a, SupportSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits_ < b.bits_;
  }

 private:
  static void check_index(int i) {
    if (i < 0 || i >= max_dim)
      throw std::out_of_range("support index out of range");
  }
  std::uint64_t bits_ = 0;
};

/// All k-element subsets of `domain`, ascending by mask value.
inline std::vector<SupportSet> k_subsets(SupportSet domain, int k) {
  const std::vector<int> elems = domain.indices();
  const int m = static_cast<int>(elems.size());
  std::vector<SupportSet> out;
  if (k < 0 || k > m) return out;
  if (k == 0) {
    out.push_back(SupportSet{});
    return out;
  }
  // Gosper's hack over the compressed m-bit domain; expansion through the
  // ascending element list preserves mask order.
  std::uint64_t c = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = m == 64 ? 0 : (std::uint64_t{1} << m);
  while (m == 64 || c < limit) {
    SupportSet s;
    for (std::uint64_t b = c; b != 0; b &= b - 1)
      s.add(elems[static_cast<std::size_t>(std::countr_zero(b))]);
    out.push_back(s);
    const std::uint64_t lo = c & (~c + 1);
    const std::uint64_t left = c + lo;
    if (left == 0) break;
    c = left | (((c ^ left) >> 2) / lo);
    if (std::popcount(c) != k) break;  // wrapped past the top
  }
  return out;
}

}  // namespace copzero

#ifndef CCGT_BITSET_HPP
#define CCGT_BITSET_HPP

#include <cstdint>
#include <vector>

namespace ccgt {

/// Fixed-size bit vector sized at construction.
class DynBitset {
public:
  DynBitset() = default;
  explicit DynBitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return w_[i >> 6] >> (i & 63) & 1; }
  int size() const { return n_; }

  bool intersects(const DynBitset &o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k])
        return true;
    return false;
  }
  bool subset_of(const DynBitset &o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k])
        return false;
    return true;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w)
        return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (uint64_t w : w_)
      c += __builtin_popcountll(w);
    return c;
  }
  DynBitset complemented() const {
    DynBitset r(n_);
    for (size_t k = 0; k < w_.size(); ++k)
      r.w_[k] = ~w_[k];
    if (n_ & 63)
      r.w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    return r;
  }
  /// Lowest set bit, or -1.
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k])
        return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }
  /// Lowest bit set here but not in o, or -1.
  int first_not_in(const DynBitset &o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t d = w_[k] & ~o.w_[k];
      if (d)
        return static_cast<int>(k * 64 + __builtin_ctzll(d));
    }
    return -1;
  }
  /// Lowest bit set in both, or -1.
  int first_common(const DynBitset &o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t d = w_[k] & o.w_[k];
      if (d)
        return static_cast<int>(k * 64 + __builtin_ctzll(d));
    }
    return -1;
  }

  bool operator==(const DynBitset &o) const { return w_ == o.w_; }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

} // namespace ccgt

#endif

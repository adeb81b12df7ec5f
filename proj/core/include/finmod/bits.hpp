#ifndef FINMOD_BITS_HPP
#define FINMOD_BITS_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace finmod {

// Dense bitset over element indices 0..size-1. Submodules and ideals are
// stored this way; intersection and equality are word operations.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : words_) if (w) return false;
    return true;
  }

  bool contains(const Bits& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  bool intersects(const Bits& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bits operator&(const Bits& other) const {
    Bits r(size_);
    for (size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  Bits operator|(const Bits& other) const {
    Bits r(size_);
    for (size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  bool operator==(const Bits& other) const = default;
  auto operator<=>(const Bits& other) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace finmod

#endif

#ifndef PSILAB_VERTEX_SET_HPP
#define PSILAB_VERTEX_SET_HPP

#include <bit>
#include <initializer_list>
#include <string>

#include "psilab/core.hpp"

namespace psilab {

/// Subset of {0,...,ground-1} stored as one machine word.
class VertexSet {
 public:
  VertexSet() : bits_(0), ground_(0) {}

  VertexSet(Word bits, int ground) : bits_(bits), ground_(ground) {
    check_ground(ground);
    if (ground < 64 && (bits >> ground) != 0)
      throw ContractViolation("VertexSet: member out of ground");
  }

  static VertexSet empty(int ground) { return VertexSet(0, ground); }

  static VertexSet full(int ground) {
    check_ground(ground);
    return VertexSet(mask_of(ground), ground);
  }

  static VertexSet single(int v, int ground) {
    return VertexSet(Word(1) << check_member(v, ground), ground);
  }

  static VertexSet of(std::initializer_list<int> vs, int ground) {
    Word b = 0;
    for (int v : vs) b |= Word(1) << check_member(v, ground);
    return VertexSet(b, ground);
  }

  Word bits() const { return bits_; }
  int ground() const { return ground_; }
  int size() const { return std::popcount(bits_); }
  bool empty_set() const { return bits_ == 0; }
  bool contains(int v) const {
    return v >= 0 && v < ground_ && (bits_ >> v & 1);
  }

  VertexSet with(int v) const {
    return VertexSet(bits_ | Word(1) << check_member(v, ground_), ground_);
  }
  VertexSet without(int v) const {
    return VertexSet(bits_ & ~(Word(1) << check_member(v, ground_)), ground_);
  }

  VertexSet operator|(const VertexSet& o) const {
    return VertexSet(bits_ | o.bits_, same_ground(o));
  }
  VertexSet operator&(const VertexSet& o) const {
    return VertexSet(bits_ & o.bits_, same_ground(o));
  }
  VertexSet operator-(const VertexSet& o) const {
    return VertexSet(bits_ & ~o.bits_, same_ground(o));
  }
  VertexSet complement() const {
    return VertexSet(~bits_ & mask_of(ground_), ground_);
  }

  bool operator==(const VertexSet& o) const = default;
  bool is_subset_of(const VertexSet& o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member; -1 when empty.
  int lowest() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  /// Iterates members in increasing order.
  class iterator {
   public:
    explicit iterator(Word rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    Word rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  /// "{0,2,5}" rendering with decimal vertex indices.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  static Word mask_of(int ground) {
    return ground >= 64 ? ~Word(0) : (Word(1) << ground) - 1;
  }
  static void check_ground(int ground) {
    if (ground < 0 || ground > 64)
      throw ContractViolation("VertexSet: ground out of range");
  }
  static int check_member(int v, int ground) {
    if (v < 0 || v >= ground)
      throw ContractViolation("VertexSet: member out of ground");
    return v;
  }
  int same_ground(const VertexSet& o) const {
    if (ground_ != o.ground_)
      throw ContractViolation("VertexSet: mixed grounds");
    return ground_;
  }

  Word bits_;
  int ground_;
};

}  // namespace psilab

#endif  // PSILAB_VERTEX_SET_HPP

#ifndef GDS_FRAME_HPP
#define GDS_FRAME_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gds/errors.hpp"

namespace gds {

class Proposition;

/// Frame of discernment: an ordered set of mutually exclusive event labels.
/// Immutable after construction and cheap to copy (labels are shared).
/// Capacity is 32 elements so any subset fits one machine word.
class Frame {
 public:
  static constexpr std::size_t kMaxElements = 32;

  /// Labels must be unique, non-empty and free of ',' (the label-list
  /// separator used by serialization and display).
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }

  /// Index of a label; throws Error if unknown.
  std::size_t index_of(const std::string& label) const;

  Proposition empty_set() const;
  Proposition full_set() const;
  Proposition singleton(std::size_t i) const;

  /// Proposition from a subset bitmask (bit i <=> element i present).
  Proposition subset(std::uint32_t bits) const;

  /// Proposition from member labels; throws Error on labels not in the frame.
  Proposition subset_of(const std::vector<std::string>& members) const;

  /// Frames compare by their ordered label lists.
  bool operator==(const Frame& o) const {
    return labels_ == o.labels_ || *labels_ == *o.labels_;
  }
  bool operator!=(const Frame& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Subset of a frame, represented as a bitmask over the frame's elements.
class Proposition {
 public:
  Proposition(Frame frame, std::uint32_t bits);

  const Frame& frame() const { return frame_; }
  std::uint32_t bits() const { return bits_; }

  bool is_empty() const { return bits_ == 0; }
  std::size_t cardinality() const;
  bool contains(std::size_t element_index) const {
    return (bits_ >> element_index) & 1u;
  }

  /// Member labels sorted lexicographically and joined by ','.
  /// The empty set renders as an empty string.
  std::string label() const;

  bool operator==(const Proposition& o) const {
    return bits_ == o.bits_ && frame_ == o.frame_;
  }
  bool operator!=(const Proposition& o) const { return !(*this == o); }

 private:
  Frame frame_;
  std::uint32_t bits_;
};

/// Bitwise AND of the member sets; throws FrameMismatch if frames differ.
Proposition intersect(const Proposition& a, const Proposition& b);

bool is_empty(const Proposition& a);

/// a subset-of b; throws FrameMismatch if frames differ.
bool is_subset(const Proposition& a, const Proposition& b);

std::string label(const Proposition& a);

/// Lazy range over all 2^N subsets of a frame, empty set first, then by
/// ascending bitmask.
class PowersetRange {
 public:
  explicit PowersetRange(Frame frame)
      : frame_(std::move(frame)), count_(std::uint64_t{1} << frame_.size()) {}

  class iterator {
   public:
    using value_type = Proposition;
    using difference_type = std::int64_t;

    iterator(const Frame* frame, std::uint64_t pos) : frame_(frame), pos_(pos) {}

    Proposition operator*() const {
      return frame_->subset(static_cast<std::uint32_t>(pos_));
    }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++pos_;
      return tmp;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }
    bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    const Frame* frame_;
    std::uint64_t pos_;
  };

  iterator begin() const { return {&frame_, 0}; }
  iterator end() const { return {&frame_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  Frame frame_;
  std::uint64_t count_;
};

inline PowersetRange powerset(const Frame& frame) { return PowersetRange(frame); }

}  // namespace gds

#endif  // GDS_FRAME_HPP

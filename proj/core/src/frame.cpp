#include "gds/frame.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace gds {

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error("Frame: needs at least one element");
  }
  if (labels.size() > kMaxElements) {
    throw Error("Frame: at most 32 elements supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) {
      throw Error("Frame: labels must be non-empty");
    }
    if (l.find(',') != std::string::npos) {
      throw Error("Frame: label '" + l + "' must not contain ','");
    }
    if (!seen.insert(l).second) {
      throw Error("Frame: duplicate label '" + l + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::size_t Frame::index_of(const std::string& label) const {
  const auto& ls = *labels_;
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) {
    throw Error("Frame: unknown label '" + label + "'");
  }
  return static_cast<std::size_t>(it - ls.begin());
}

Proposition Frame::empty_set() const { return {*this, 0}; }

Proposition Frame::full_set() const {
  const std::uint64_t all = (std::uint64_t{1} << size()) - 1;
  return {*this, static_cast<std::uint32_t>(all)};
}

Proposition Frame::singleton(std::size_t i) const {
  if (i >= size()) {
    throw Error("Frame: element index out of range");
  }
  return {*this, std::uint32_t{1} << i};
}

Proposition Frame::subset(std::uint32_t bits) const { return {*this, bits}; }

Proposition Frame::subset_of(const std::vector<std::string>& members) const {
  std::uint32_t bits = 0;
  for (const auto& m : members) {
    bits |= std::uint32_t{1} << index_of(m);
  }
  return {*this, bits};
}

Proposition::Proposition(Frame frame, std::uint32_t bits)
    : frame_(std::move(frame)), bits_(bits) {
  if (frame_.size() < 32 && bits_ >= (std::uint32_t{1} << frame_.size())) {
    throw Error("Proposition: bitmask exceeds frame size");
  }
}

std::size_t Proposition::cardinality() const { return std::popcount(bits_); }

std::string Proposition::label() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (contains(i)) {
      names.push_back(frame_.labels()[i]);
    }
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += names[i];
  }
  return out;
}

Proposition intersect(const Proposition& a, const Proposition& b) {
  if (a.frame() != b.frame()) {
    throw FrameMismatch("intersect: propositions from different frames");
  }
  return {a.frame(), a.bits() & b.bits()};
}

bool is_empty(const Proposition& a) { return a.is_empty(); }

bool is_subset(const Proposition& a, const Proposition& b) {
  if (a.frame() != b.frame()) {
    throw FrameMismatch("is_subset: propositions from different frames");
  }
  return (a.bits() & ~b.bits()) == 0;
}

std::string label(const Proposition& a) { return a.label(); }

}  // namespace gds

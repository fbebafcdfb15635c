#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace loopforge {

using Element = std::uint32_t;

enum class Side { left, right };

/// A finite loop stored as its Cayley table with the identity pinned at 0.
///
/// Instances only come out of validate_loop(), so every LoopTable is a Latin
/// square whose row 0 and column 0 are the identity permutation. Both
/// division tables are built once at validation time.
class LoopTable {
 public:
  /// The trivial loop {0}.
  LoopTable();

  std::size_t order() const noexcept { return order_; }

  Element mul(Element x, Element y) const noexcept { return mul_[x * order_ + y]; }
  /// x\y, the unique z with x*z = y.
  Element ldiv(Element x, Element y) const noexcept { return ldiv_[x * order_ + y]; }
  /// x/y, the unique z with z*y = x.
  Element rdiv(Element x, Element y) const noexcept { return rdiv_[x * order_ + y]; }

  std::span<Element const> cells() const noexcept { return mul_; }
  std::span<Element const> row(Element x) const noexcept {
    return std::span<Element const>(mul_).subspan(x * order_, order_);
  }

  std::vector<std::vector<Element>> rows() const;

  std::string const& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Tables compare by content; the label is ignored.
  friend bool operator==(LoopTable const& a, LoopTable const& b) noexcept {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  friend LoopTable validate_loop(std::size_t, std::span<Element const>, std::string);

  std::size_t order_ = 1;
  std::vector<Element> mul_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  std::string label_;
};

/// Checks squareness, range, the Latin property and the identity law.
/// Throws LoopError with MalformedTable, NotLatin or NoIdentity.
LoopTable validate_loop(std::vector<std::vector<long long>> const& raw, std::string label = {});
LoopTable validate_loop(std::size_t order, std::span<Element const> cells, std::string label = {});

template <class Product>
LoopTable loop_from_function(std::size_t order, Product&& product, std::string label = {}) {
  std::vector<Element> cells(order * order);
  for (Element x = 0; x < order; ++x)
    for (Element y = 0; y < order; ++y) cells[x * order + y] = static_cast<Element>(product(x, y));
  return validate_loop(order, cells, std::move(label));
}

Element divide(LoopTable const& loop, Side side, Element x, Element y);

/// A subset of a loop's carrier, kept sorted and duplicate free so that
/// member-wise equality is set equality.
class ElementSubset {
 public:
  ElementSubset() = default;
  ElementSubset(std::size_t universe, std::vector<Element> members);

  static ElementSubset whole(std::size_t universe);
  static ElementSubset trivial(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::vector<Element> const& members() const noexcept { return members_; }
  Element operator[](std::size_t i) const noexcept { return members_[i]; }

  bool contains(Element x) const noexcept {
    return x < universe_ && position_[x] >= 0;
  }
  /// Index of x inside members(); x must be a member.
  std::size_t position(Element x) const noexcept { return static_cast<std::size_t>(position_[x]); }

  bool is_subset_of(ElementSubset const& other) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(ElementSubset const& a, ElementSubset const& b) noexcept {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Element> members_;
  std::vector<int> position_;
};

ElementSubset intersect(ElementSubset const& a, ElementSubset const& b);

/// A total function [0, size()) -> [0, codomain_size()).
class FiniteMap {
 public:
  FiniteMap() = default;
  FiniteMap(std::size_t codomain_size, std::vector<Element> images);

  static FiniteMap identity(std::size_t size);
  static FiniteMap constant(std::size_t size, std::size_t codomain_size, Element value);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_; }
  Element operator()(Element x) const noexcept { return images_[x]; }
  std::vector<Element> const& images() const noexcept { return images_; }

  bool is_bijective() const noexcept;
  bool is_identity() const noexcept;
  /// Inverse of a bijection.
  FiniteMap inverse() const;

  friend bool operator==(FiniteMap const& a, FiniteMap const& b) noexcept {
    return a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }
  friend bool operator<(FiniteMap const& a, FiniteMap const& b) noexcept {
    return a.images_ < b.images_;
  }

 private:
  std::size_t codomain_ = 0;
  std::vector<Element> images_;
};

/// outer o inner, i.e. x -> outer(inner(x)).
FiniteMap compose(FiniteMap const& outer, FiniteMap const& inner);

bool is_homomorphism(LoopTable const& from, LoopTable const& to, FiniteMap const& map);

}  // namespace loopforge

#include "loopforge/loop_table.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "loopforge/error.hpp"

namespace loopforge {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

}  // namespace

LoopTable::LoopTable() : order_(1), mul_{0}, ldiv_{0}, rdiv_{0} {}

std::vector<std::vector<Element>> LoopTable::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (Element x = 0; x < order_; ++x) out[x].assign(row(x).begin(), row(x).end());
  return out;
}

LoopTable validate_loop(std::vector<std::vector<long long>> const& raw, std::string label) {
  std::size_t const n = raw.size();
  if (n == 0) fail(ErrorKind::MalformedTable, "empty table");
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      fail(ErrorKind::MalformedTable, "row " + std::to_string(i) + " has " +
                                          std::to_string(raw[i].size()) + " entries, expected " +
                                          std::to_string(n));
    }
    for (long long v : raw[i]) {
      if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        fail(ErrorKind::MalformedTable,
             "entry " + std::to_string(v) + " in row " + std::to_string(i) + " is outside [0, " +
                 std::to_string(n) + ")");
      }
      cells.push_back(static_cast<Element>(v));
    }
  }
  return validate_loop(n, cells, std::move(label));
}

LoopTable validate_loop(std::size_t n, std::span<Element const> cells, std::string label) {
  if (n == 0) fail(ErrorKind::MalformedTable, "order must be positive");
  if (n > 0xFFFF) fail(ErrorKind::MalformedTable, "order too large");
  if (cells.size() != n * n) fail(ErrorKind::MalformedTable, "cell count is not order squared");
  for (Element v : cells)
    if (v >= n) fail(ErrorKind::MalformedTable, "entry " + std::to_string(v) + " out of range");

  LoopTable out;
  out.order_ = n;
  out.mul_.assign(cells.begin(), cells.end());
  out.ldiv_.assign(n * n, kUnset);
  out.rdiv_.assign(n * n, kUnset);
  out.label_ = std::move(label);

  // ldiv_[x][x*y] = y fills each row exactly once iff the row is a permutation.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element const p = out.mul_[x * n + y];
      Element& slot = out.ldiv_[x * n + p];
      if (slot != kUnset) {
        fail(ErrorKind::NotLatin, "row " + std::to_string(x) + " repeats " + std::to_string(p));
      }
      slot = y;
    }
  }
  for (Element y = 0; y < n; ++y) {
    for (Element x = 0; x < n; ++x) {
      Element const p = out.mul_[x * n + y];
      Element& slot = out.rdiv_[p * n + y];
      if (slot != kUnset) {
        fail(ErrorKind::NotLatin, "column " + std::to_string(y) + " repeats " + std::to_string(p));
      }
      slot = x;
    }
  }

  auto is_identity = [&](Element e) {
    for (Element x = 0; x < n; ++x)
      if (out.mul_[e * n + x] != x || out.mul_[x * n + e] != x) return false;
    return true;
  };
  if (!is_identity(0)) {
    std::ostringstream msg;
    msg << "element 0 is not a two-sided identity";
    Element found = kUnset;
    for (Element e = 1; e < n && found == kUnset; ++e)
      if (is_identity(e)) found = e;
    if (found != kUnset)
      msg << "; element " << found << " is an identity, relabel it to 0";
    else
      msg << "; the table has no identity element";
    fail(ErrorKind::NoIdentity, msg.str());
  }
  return out;
}

Element divide(LoopTable const& loop, Side side, Element x, Element y) {
  return side == Side::left ? loop.ldiv(x, y) : loop.rdiv(x, y);
}

ElementSubset::ElementSubset(std::size_t universe, std::vector<Element> members)
    : universe_(universe), members_(std::move(members)), position_(universe, -1) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= universe_)
      fail(ErrorKind::MalformedTable, "subset member " + std::to_string(members_[i]) +
                                          " outside carrier of order " + std::to_string(universe_));
    position_[members_[i]] = static_cast<int>(i);
  }
}

ElementSubset ElementSubset::whole(std::size_t universe) {
  std::vector<Element> m(universe);
  for (std::size_t i = 0; i < universe; ++i) m[i] = static_cast<Element>(i);
  return ElementSubset(universe, std::move(m));
}

ElementSubset ElementSubset::trivial(std::size_t universe) { return ElementSubset(universe, {0}); }

bool ElementSubset::is_subset_of(ElementSubset const& other) const noexcept {
  for (Element x : members_)
    if (!other.contains(x)) return false;
  return true;
}

ElementSubset intersect(ElementSubset const& a, ElementSubset const& b) {
  std::vector<Element> m;
  for (Element x : a)
    if (b.contains(x)) m.push_back(x);
  return ElementSubset(a.universe(), std::move(m));
}

FiniteMap::FiniteMap(std::size_t codomain_size, std::vector<Element> images)
    : codomain_(codomain_size), images_(std::move(images)) {
  for (Element y : images_)
    if (y >= codomain_)
      fail(ErrorKind::MalformedTable, "map image " + std::to_string(y) + " outside codomain of size " +
                                          std::to_string(codomain_));
}

FiniteMap FiniteMap::identity(std::size_t size) {
  std::vector<Element> im(size);
  for (std::size_t i = 0; i < size; ++i) im[i] = static_cast<Element>(i);
  return FiniteMap(size, std::move(im));
}

FiniteMap FiniteMap::constant(std::size_t size, std::size_t codomain_size, Element value) {
  return FiniteMap(codomain_size, std::vector<Element>(size, value));
}

bool FiniteMap::is_bijective() const noexcept {
  if (images_.size() != codomain_) return false;
  std::vector<bool> seen(codomain_, false);
  for (Element y : images_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool FiniteMap::is_identity() const noexcept {
  if (images_.size() != codomain_) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

FiniteMap FiniteMap::inverse() const {
  if (!is_bijective()) fail(ErrorKind::MalformedTable, "inverse of a non-bijective map");
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Element>(i);
  return FiniteMap(images_.size(), std::move(inv));
}

FiniteMap compose(FiniteMap const& outer, FiniteMap const& inner) {
  if (inner.codomain_size() != outer.size())
    fail(ErrorKind::MalformedTable, "composition of incompatible maps");
  std::vector<Element> im(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) im[i] = outer(inner(static_cast<Element>(i)));
  return FiniteMap(outer.codomain_size(), std::move(im));
}

bool is_homomorphism(LoopTable const& from, LoopTable const& to, FiniteMap const& map) {
  if (map.size() != from.order() || map.codomain_size() != to.order()) return false;
  for (Element x = 0; x < from.order(); ++x)
    for (Element y = 0; y < from.order(); ++y)
      if (map(from.mul(x, y)) != to.mul(map(x), map(y))) return false;
  return true;
}

}  // namespace loopforge

#include "loopforge/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>

#include "loopforge/error.hpp"

namespace loopforge {

bool PropertyFilter::accepts(LoopProperties const& props) const noexcept {
  for (Property p : required)
    if (!props.get(p)) return false;
  for (Property p : forbidden)
    if (props.get(p)) return false;
  return true;
}

PropertyFilter parse_filter(std::string_view text) {
  PropertyFilter filter;
  while (!text.empty()) {
    std::size_t const cut = text.find(',');
    std::string_view item = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view() : text.substr(cut + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    bool const negated = item.front() == '!';
    if (negated) item.remove_prefix(1);
    (negated ? filter.forbidden : filter.required).push_back(parse_property(item));
  }
  return filter;
}

std::string format_filter(PropertyFilter const& filter) {
  std::string out;
  auto add = [&](Property p, bool negated) {
    if (!out.empty()) out += ',';
    if (negated) out += '!';
    out += property_name(p);
  };
  for (Property p : filter.required) add(p, false);
  for (Property p : filter.forbidden) add(p, true);
  return out;
}

namespace {

constexpr std::size_t kMaxOrder = 8;
constexpr std::size_t kMaxExhaustive = 6;

// An equational law over variables x, y, z, written as a small expression
// tree. Leaves hold a variable index, inner nodes a product of two nodes.
struct Node {
  int var = -1;
  int left = -1;
  int right = -1;
};

struct Law {
  std::vector<Node> nodes;
  int lhs = 0;
  int rhs = 0;
  int variables = 3;
};

class LawBuilder {
 public:
  int var(int v) {
    law_.nodes.push_back({v, -1, -1});
    return static_cast<int>(law_.nodes.size()) - 1;
  }
  int mul(int a, int b) {
    law_.nodes.push_back({-1, a, b});
    return static_cast<int>(law_.nodes.size()) - 1;
  }
  Law done(int lhs, int rhs, int variables) {
    law_.lhs = lhs;
    law_.rhs = rhs;
    law_.variables = variables;
    return std::move(law_);
  }

 private:
  Law law_;
};

std::optional<Law> law_for(Property p) {
  LawBuilder b;
  int const x = b.var(0), y = b.var(1), z = b.var(2);
  switch (p) {
    case Property::associative:
      return b.done(b.mul(b.mul(x, y), z), b.mul(x, b.mul(y, z)), 3);
    case Property::commutative:
      return b.done(b.mul(x, y), b.mul(y, x), 2);
    case Property::left_alternative:
      return b.done(b.mul(x, b.mul(x, y)), b.mul(b.mul(x, x), y), 2);
    case Property::right_alternative:
      return b.done(b.mul(b.mul(y, x), x), b.mul(y, b.mul(x, x)), 2);
    case Property::flexible:
      return b.done(b.mul(b.mul(x, y), x), b.mul(x, b.mul(y, x)), 2);
    case Property::left_bol:
      return b.done(b.mul(x, b.mul(y, b.mul(x, z))), b.mul(b.mul(x, b.mul(y, x)), z), 3);
    case Property::right_bol:
      return b.done(b.mul(b.mul(b.mul(z, x), y), x), b.mul(z, b.mul(b.mul(x, y), x)), 3);
    default:
      return std::nullopt;
  }
}

std::vector<Element> canonical_cells(LoopTable const& loop);

using Mask = std::uint16_t;

struct State {
  std::size_t n = 0;
  std::array<std::int8_t, kMaxOrder * kMaxOrder> cell{};
  std::array<Mask, kMaxOrder> row_used{};
  std::array<Mask, kMaxOrder> col_used{};

  std::int8_t at(int r, int c) const { return cell[r * n + c]; }
  Mask candidates(int r, int c) const {
    return static_cast<Mask>(((1u << n) - 1) & ~(row_used[r] | col_used[c]));
  }
  bool assign(int r, int c, int v) {
    std::int8_t& slot = cell[r * n + c];
    if (slot >= 0) return slot == v;
    Mask const bit = static_cast<Mask>(1u << v);
    if ((row_used[r] | col_used[c]) & bit) return false;
    slot = static_cast<std::int8_t>(v);
    row_used[r] |= bit;
    col_used[c] |= bit;
    return true;
  }
};

class Searcher {
 public:
  Searcher(std::size_t n, std::vector<Law> laws, PropertyFilter const& filter)
      : n_(n), laws_(std::move(laws)), filter_(filter) {}

  State initial() const {
    State s;
    s.n = n_;
    s.cell.fill(-1);
    for (std::size_t i = 0; i < n_; ++i) {
      s.assign(0, static_cast<int>(i), static_cast<int>(i));
      if (i > 0) s.assign(static_cast<int>(i), 0, static_cast<int>(i));
    }
    return s;
  }

  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      if (!latin_pass(s, changed)) return false;
      for (Law const& law : laws_)
        if (!law_pass(s, law, changed)) return false;
    }
    return true;
  }

  /// Next cell to branch on (fewest candidates, then row-major), if any.
  std::optional<int> branch_cell(State const& s) const {
    std::optional<int> best;
    int best_count = 99;
    for (int i = 0; i < static_cast<int>(n_ * n_); ++i) {
      if (s.cell[i] >= 0) continue;
      int const count = std::popcount(s.candidates(i / static_cast<int>(n_), i % static_cast<int>(n_)));
      if (count < best_count) {
        best_count = count;
        best = i;
      }
    }
    return best;
  }

  void search(State const& s, std::vector<std::vector<Element>>& out) const {
    auto const pick = branch_cell(s);
    if (!pick) {
      accept(s, out);
      return;
    }
    int const r = *pick / static_cast<int>(n_), c = *pick % static_cast<int>(n_);
    Mask cand = s.candidates(r, c);
    while (cand) {
      int const v = std::countr_zero(cand);
      cand &= static_cast<Mask>(cand - 1);
      State next = s;
      if (next.assign(r, c, v) && propagate(next)) search(next, out);
    }
  }

 private:
  bool latin_pass(State& s, bool& changed) const {
    int const n = static_cast<int>(n_);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (s.at(r, c) >= 0) continue;
        Mask const cand = s.candidates(r, c);
        if (cand == 0) return false;
        if (std::has_single_bit(cand)) {
          if (!s.assign(r, c, std::countr_zero(cand))) return false;
          changed = true;
        }
      }
    for (int line = 0; line < n; ++line)
      for (int v = 0; v < n; ++v) {
        Mask const bit = static_cast<Mask>(1u << v);
        if (!(s.row_used[line] & bit)) {
          int count = 0, where = -1;
          for (int c = 0; c < n && count < 2; ++c)
            if (s.at(line, c) < 0 && (s.candidates(line, c) & bit)) ++count, where = c;
          if (count == 0) return false;
          if (count == 1) {
            if (!s.assign(line, where, v)) return false;
            changed = true;
          }
        }
        if (!(s.col_used[line] & bit)) {
          int count = 0, where = -1;
          for (int r = 0; r < n && count < 2; ++r)
            if (s.at(r, line) < 0 && (s.candidates(r, line) & bit)) ++count, where = r;
          if (count == 0) return false;
          if (count == 1) {
            if (!s.assign(where, line, v)) return false;
            changed = true;
          }
        }
      }
    return true;
  }

  // Value of a node, or -1 when some product on the way is still open.
  int eval(State const& s, Law const& law, int node, int const* vars) const {
    Node const& nd = law.nodes[node];
    if (nd.var >= 0) return vars[nd.var];
    int const a = eval(s, law, nd.left, vars);
    if (a < 0) return -1;
    int const b = eval(s, law, nd.right, vars);
    if (b < 0) return -1;
    return s.at(a, b);
  }

  struct Side {
    int value = -1;
    int open_r = -1;
    int open_c = -1;
  };

  Side eval_root(State const& s, Law const& law, int node, int const* vars) const {
    Node const& nd = law.nodes[node];
    if (nd.var >= 0) return {vars[nd.var]};
    int const a = eval(s, law, nd.left, vars);
    int const b = a < 0 ? -1 : eval(s, law, nd.right, vars);
    if (a < 0 || b < 0) return {};
    int const v = s.at(a, b);
    if (v >= 0) return {v};
    return {-1, a, b};
  }

  bool law_pass(State& s, Law const& law, bool& changed) const {
    int const n = static_cast<int>(n_);
    int const zmax = law.variables >= 3 ? n : 1;
    int vars[3];
    for (vars[0] = 0; vars[0] < n; ++vars[0])
      for (vars[1] = 0; vars[1] < n; ++vars[1])
        for (vars[2] = 0; vars[2] < zmax; ++vars[2]) {
          Side const l = eval_root(s, law, law.lhs, vars);
          Side const r = eval_root(s, law, law.rhs, vars);
          if (l.value >= 0 && r.value >= 0) {
            if (l.value != r.value) return false;
          } else if (l.value >= 0 && r.open_r >= 0) {
            if (!s.assign(r.open_r, r.open_c, l.value)) return false;
            changed = true;
          } else if (r.value >= 0 && l.open_r >= 0) {
            if (!s.assign(l.open_r, l.open_c, r.value)) return false;
            changed = true;
          }
        }
    return true;
  }

  void accept(State const& s, std::vector<std::vector<Element>>& out) const {
    std::vector<Element> cells(n_ * n_);
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<Element>(s.cell[i]);
    LoopTable const loop = validate_loop(n_, cells);
    if (!filter_.accepts(loop_properties(loop))) return;
    out.push_back(canonical_cells(loop));
  }

  std::size_t n_;
  std::vector<Law> laws_;
  PropertyFilter const& filter_;
};

std::vector<Element> canonical_cells(LoopTable const& loop) {
  std::size_t const n = loop.order();
  std::vector<Element> best(loop.cells().begin(), loop.cells().end());
  if (n <= 2) return best;
  // sigma[i] is the old element that receives the new label i.
  std::vector<Element> sigma(n), pi(n), current(n * n);
  for (Element i = 0; i < n; ++i) sigma[i] = i;
  while (std::next_permutation(sigma.begin() + 1, sigma.end())) {
    for (Element i = 0; i < n; ++i) pi[sigma[i]] = i;
    bool smaller = false;
    std::size_t idx = 0;
    for (; idx < n * n; ++idx) {
      Element const v = pi[loop.mul(sigma[idx / n], sigma[idx % n])];
      current[idx] = v;
      if (!smaller) {
        if (v > best[idx]) break;
        if (v < best[idx]) smaller = true;
      }
    }
    if (smaller) best = current;
  }
  return best;
}

}  // namespace

LoopTable canonical_form(LoopTable const& loop) {
  return validate_loop(loop.order(), canonical_cells(loop), loop.label());
}

std::vector<LoopTable> enumerate_loops(std::size_t n, PropertyFilter const& filter,
                                       EnumerationOptions const& options) {
  if (n == 0 || n > kMaxOrder)
    fail(ErrorKind::OrderTooLarge, "enumeration supports orders 1.." + std::to_string(kMaxOrder));
  std::vector<Law> laws;
  bool prunable = false;
  for (Property p : filter.required)
    if (auto law = law_for(p)) {
      laws.push_back(std::move(*law));
      prunable = prunable || p == Property::associative || p == Property::left_bol || p == Property::right_bol;
    }
  if (n > kMaxExhaustive && !prunable)
    fail(ErrorKind::OrderTooLarge, "orders above " + std::to_string(kMaxExhaustive) +
                                       " need an associative, leftBol or rightBol requirement");

  Searcher const searcher(n, std::move(laws), filter);
  State root = searcher.initial();
  std::vector<State> tasks;
  if (searcher.propagate(root)) tasks.push_back(root);
  // Split on the first free row: one task per consistent prefix of row 1.
  std::size_t const prefix = std::min<std::size_t>(2, n > 1 ? n - 1 : 0);
  for (std::size_t col = 1; col <= prefix; ++col) {
    std::vector<State> next;
    for (State const& s : tasks) {
      int const c = static_cast<int>(col);
      if (s.at(1, c) >= 0) {
        next.push_back(s);
        continue;
      }
      Mask cand = s.candidates(1, c);
      while (cand) {
        int const v = std::countr_zero(cand);
        cand &= static_cast<Mask>(cand - 1);
        State child = s;
        if (child.assign(1, c, v) && searcher.propagate(child)) next.push_back(child);
      }
    }
    tasks = std::move(next);
  }

  std::vector<std::vector<std::vector<Element>>> found(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) { searcher.search(tasks[i], found[i]); }, options.workers);

  std::vector<std::vector<Element>> all;
  for (auto& part : found)
    for (auto& cells : part) all.push_back(std::move(cells));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<LoopTable> out;
  out.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    out.push_back(validate_loop(n, all[i], "L" + std::to_string(n) + "." + std::to_string(i)));
  return out;
}

}  // namespace loopforge

#include "loopforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "loopforge/error.hpp"
#include "loopforge/loops.hpp"

namespace loopforge {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

struct Document {
  std::string label;
  std::vector<Line> lines;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Document split(std::string_view text) {
  Document doc;
  bool first_comment = true;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t const cut = text.find('\n');
    std::string_view line = trim(text.substr(0, cut));
    text = cut == std::string_view::npos ? std::string_view() : text.substr(cut + 1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view tag = "label:";
      std::string_view body = trim(line.substr(1));
      if (first_comment && doc.lines.empty() && body.starts_with(tag))
        doc.label = std::string(trim(body.substr(tag.size())));
      first_comment = false;
      continue;
    }
    doc.lines.push_back({number, line});
  }
  return doc;
}

[[noreturn]] void parse_fail(std::size_t line, std::string const& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<long long> numbers(Line const& line) {
  std::vector<long long> out;
  std::string_view rest = line.text;
  while (true) {
    rest = trim(rest);
    if (rest.empty()) break;
    std::size_t const cut = std::min(rest.find(' '), rest.find('\t'));
    std::string_view token = rest.substr(0, cut);
    long long value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size())
      parse_fail(line.number, "expected an integer, got '" + std::string(token) + "'");
    out.push_back(value);
    rest = cut == std::string_view::npos ? std::string_view() : rest.substr(cut);
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> const& lines) : lines_(lines) {}

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_number() const { return done() ? (lines_.empty() ? 0 : lines_.back().number) : lines_[pos_].number; }

  Line const& next(char const* expecting) {
    if (done()) parse_fail(line_number(), std::string("unexpected end of input, expected ") + expecting);
    return lines_[pos_++];
  }

  void header(std::string_view name) {
    Line const& line = next("a section header");
    if (line.text != name) parse_fail(line.number, "expected '" + std::string(name) + "'");
  }

  std::vector<long long> row(std::size_t width, char const* what) {
    Line const& line = next(what);
    auto values = numbers(line);
    if (values.size() != width)
      parse_fail(line.number, std::string(what) + " needs " + std::to_string(width) + " entries, found " +
                                  std::to_string(values.size()));
    return values;
  }

  LoopTable table(std::string label) {
    Line const& first = next("the table order");
    auto n = numbers(first);
    if (n.size() != 1 || n[0] < 1 || n[0] > 4096) parse_fail(first.number, "expected the table order");
    std::size_t const order = static_cast<std::size_t>(n[0]);
    std::vector<std::vector<long long>> raw;
    for (std::size_t i = 0; i < order; ++i) raw.push_back(row(order, "table row"));
    return validate_loop(raw, std::move(label));
  }

  void finish() {
    if (!done()) parse_fail(line_number(), "unexpected trailing content");
  }

 private:
  std::vector<Line> const& lines_;
  std::size_t pos_ = 0;
};

std::vector<Element> elements(std::vector<long long> const& values, std::size_t bound, std::size_t line,
                              char const* what) {
  std::vector<Element> out;
  out.reserve(values.size());
  for (long long v : values) {
    if (v < 0 || static_cast<std::size_t>(v) >= bound)
      parse_fail(line, std::string(what) + " value " + std::to_string(v) + " is out of range");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

void emit_label(std::ostringstream& out, std::string const& label) {
  if (!label.empty()) out << "# label: " << label << '\n';
}

void emit_rows(std::ostringstream& out, LoopTable const& loop) {
  out << loop.order() << '\n';
  for (Element x = 0; x < loop.order(); ++x) {
    for (Element y = 0; y < loop.order(); ++y) out << (y ? " " : "") << loop.mul(x, y);
    out << '\n';
  }
}

void emit_values(std::ostringstream& out, std::vector<Element> const& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  out << '\n';
}

}  // namespace

LoopTable parse_table(std::string_view text) {
  Document const doc = split(text);
  Reader reader(doc.lines);
  LoopTable loop = reader.table(doc.label);
  reader.finish();
  return loop;
}

std::string emit_table(LoopTable const& loop) {
  std::ostringstream out;
  emit_label(out, loop.label());
  emit_rows(out, loop);
  return out.str();
}

namespace {

SchreierData read_schreier(Reader& reader, std::string label) {
  reader.header("K:");
  LoopTable k = reader.table({});
  reader.header("G:");
  LoopTable g = reader.table({});
  reader.header("Theta:");
  std::vector<FiniteMap> theta;
  for (Element s = 0; s < k.order(); ++s) {
    std::size_t const line = reader.line_number();
    theta.emplace_back(g.order(), elements(reader.row(g.order(), "Theta row"), g.order(), line, "Theta"));
  }
  reader.header("f:");
  std::vector<Element> factor;
  for (Element s = 0; s < k.order(); ++s) {
    std::size_t const line = reader.line_number();
    auto row = elements(reader.row(k.order(), "f row"), g.order(), line, "f");
    factor.insert(factor.end(), row.begin(), row.end());
  }
  return SchreierData(std::move(k), std::move(g), std::move(theta), std::move(factor), std::move(label));
}

void write_schreier(std::ostringstream& out, SchreierData const& data) {
  emit_label(out, data.label());
  out << "K:\n";
  emit_rows(out, data.k());
  out << "G:\n";
  emit_rows(out, data.g());
  out << "Theta:\n";
  for (auto const& t : data.thetas()) emit_values(out, t.images());
  out << "f:\n";
  std::size_t const nk = data.k().order();
  for (std::size_t tau = 0; tau < nk; ++tau)
    emit_values(out, std::vector<Element>(data.factor().begin() + tau * nk, data.factor().begin() + (tau + 1) * nk));
}

}  // namespace

SchreierData parse_schreier(std::string_view text) {
  Document const doc = split(text);
  Reader reader(doc.lines);
  SchreierData data = read_schreier(reader, doc.label);
  reader.finish();
  return data;
}

std::string emit_schreier(SchreierData const& data) {
  std::ostringstream out;
  write_schreier(out, data);
  return out.str();
}

PairFile parse_pair(std::string_view text) {
  Document const doc = split(text);
  Reader reader(doc.lines);
  PairFile pair;
  auto section = [&](char const* name) {
    reader.header(name);
    Line const& line = reader.next("a value row");
    auto values = numbers(line);
    return elements(values, static_cast<std::size_t>(-1) >> 1, line.number, name);
  };
  pair.kappa = section("kappa:");
  pair.sigma = section("sigma:");
  reader.finish();
  if (pair.kappa.size() != pair.sigma.size())
    fail(ErrorKind::ParseError, "kappa and sigma must have one entry per coset");
  return pair;
}

std::string emit_pair(PairFile const& pair) {
  std::ostringstream out;
  out << "kappa:\n";
  emit_values(out, pair.kappa);
  out << "sigma:\n";
  emit_values(out, pair.sigma);
  return out.str();
}

PairFile pair_file(LoopTable const& loop, ElementSubset const& subgroup, DataPair const& pair) {
  auto const cosets = left_cosets(loop, subgroup);
  PairFile file{pair.kappa.images(), {}};
  for (auto const& coset : cosets) {
    auto it = std::find_if(pair.sigma.begin(), pair.sigma.end(), [&](Element x) { return coset.contains(x); });
    if (it == pair.sigma.end()) fail(ErrorKind::InvalidPair, "sigma misses a coset");
    file.sigma.push_back(*it);
  }
  return file;
}

DataPair resolve_pair(LoopTable const& loop, ElementSubset const& subgroup, PairFile const& file,
                      std::optional<LoopTable> const& domain) {
  FactorLoop const factor = factor_loop(loop, subgroup);
  std::size_t const cosets = factor.cosets.size();
  if (file.kappa.size() != cosets || file.sigma.size() != cosets)
    fail(ErrorKind::InvalidPair, "the pair must list " + std::to_string(cosets) + " cosets");
  for (Element c = 0; c < cosets; ++c)
    if (file.sigma[c] >= loop.order() || !factor.cosets[c].contains(file.sigma[c]))
      fail(ErrorKind::InvalidPair, "sigma entry " + std::to_string(c) + " does not lie in coset " + std::to_string(c));
  for (Element v : file.kappa)
    if (v >= cosets) fail(ErrorKind::InvalidPair, "kappa value out of range");
  DataPair pair{domain ? *domain : factor.quotient, FiniteMap(cosets, file.kappa),
                ElementSubset(loop.order(), file.sigma)};
  transversal_section(loop, subgroup, pair);
  return pair;
}

std::string emit_decomposition(Decomposition const& d) {
  std::ostringstream out;
  write_schreier(out, d.data);
  out << "iso:\n";
  emit_values(out, d.iso.images());
  return out.str();
}

FiniteMap parse_map_line(std::string_view text, std::optional<std::size_t> codomain) {
  Document const doc = split(text);
  if (doc.lines.size() != 1) fail(ErrorKind::ParseError, "a map is a single line of images");
  auto values = numbers(doc.lines.front());
  std::size_t bound = 0;
  for (long long v : values) {
    if (v < 0) parse_fail(doc.lines.front().number, "negative image");
    bound = std::max<std::size_t>(bound, static_cast<std::size_t>(v) + 1);
  }
  std::size_t const size = codomain.value_or(bound);
  return FiniteMap(size, elements(values, size, doc.lines.front().number, "map"));
}

std::string emit_map_line(FiniteMap const& map) {
  std::ostringstream out;
  emit_values(out, map.images());
  std::string s = out.str();
  s.pop_back();
  return s;
}

std::vector<Element> parse_index_list(std::string_view text) {
  std::vector<Element> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    std::size_t const cut = text.find(',');
    std::string_view token = trim(text.substr(0, cut));
    Element value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size())
      fail(ErrorKind::ParseError, "expected a comma-separated list of element indices, got '" + std::string(text) + "'");
    out.push_back(value);
    if (cut == std::string_view::npos) break;
    text = text.substr(cut + 1);
  }
  return out;
}

std::string read_text_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace loopforge

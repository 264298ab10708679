#include "choc/formats.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "choc/errors.hpp"

namespace choc {

namespace {

constexpr const char* kSvgHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" ";

void append_cells(std::ostringstream& out, const Pattern& p, const char* fill) {
  out << "<g fill=\"" << fill << "\">\n";
  for (const Cell c : p.cells()) {
    out << "<rect x=\"" << c.i - 1 << "\" y=\"" << c.j - 1 << "\" width=\"1\" height=\"1\"/>\n";
  }
  out << "</g>\n";
}

// Splits PBM text into single-character bit tokens after the header.
class PbmReader {
 public:
  explicit PbmReader(std::string_view text) : text_(text) {}

  std::string next_word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '#') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int next_bit() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("PBM: truncated bitmap");
    const char c = text_[pos_++];
    if (c != '0' && c != '1') throw ParseError(std::string("PBM: unexpected character '") + c + "'");
    return c - '0';
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  void skip() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint32_t parse_dimension(const std::string& word) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size() || v == 0) {
    throw ParseError("PBM: bad dimension '" + word + "'");
  }
  return v;
}

std::int64_t parse_int(std::string_view field) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("CSV: bad integer '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string to_pbm(const Pattern& p) {
  const Side m = p.side();
  std::string out = "P1\n" + std::to_string(m) + " " + std::to_string(m) + "\n";
  out.reserve(out.size() + 2 * static_cast<std::size_t>(m) * m);
  for (Index j = m; j >= 1; --j) {
    for (Index i = 1; i <= m; ++i) {
      out += p.contains(i, j) ? '1' : '0';
      out += i == m ? '\n' : ' ';
    }
  }
  return out;
}

Pattern parse_pbm(std::string_view text) {
  PbmReader reader(text);
  if (reader.next_word() != "P1") throw ParseError("PBM: missing P1 magic");
  const std::uint32_t width = parse_dimension(reader.next_word());
  const std::uint32_t height = parse_dimension(reader.next_word());
  if (width != height) throw ParseError("PBM: pattern bitmaps are square");
  if (width > kMaxPatternSide) throw CapacityError("PBM: side exceeds pattern bound");
  Pattern p(width);
  for (Index j = height; j >= 1; --j) {
    for (Index i = 1; i <= width; ++i) {
      if (reader.next_bit()) p.insert(i, j);
    }
  }
  if (!reader.at_end()) throw ParseError("PBM: trailing data after bitmap");
  return p;
}

std::string to_csv(const Section& sec) {
  std::ostringstream out;
  for (const Diamond& d : sec.diamonds) {
    out << sec.order << ',' << sec.level_num << ',' << sec.level_den << ',' << d.cx << ',' << d.cy
        << ',' << d.r << ',' << sec.den << '\n';
  }
  return out.str();
}

Section parse_section_csv(std::string_view text) {
  Section sec;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::int64_t fields[7];
    std::size_t count = 0;
    while (true) {
      const std::size_t comma = line.find(',');
      if (count == 7) throw ParseError("CSV line " + std::to_string(line_no) + ": too many fields");
      fields[count++] = parse_int(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (count != 7) throw ParseError("CSV line " + std::to_string(line_no) + ": expected 7 fields");

    // den is 2^(order+1); the level denominator is 2^order or 2^(order+1).
    if (fields[0] < 0 || fields[0] > 60 || fields[6] != (std::int64_t{2} << fields[0]) ||
        (fields[2] != fields[6] && 2 * fields[2] != fields[6])) {
      throw ParseError("CSV line " + std::to_string(line_no) + ": bad order or denominator");
    }
    if (!have_header) {
      sec.order = static_cast<unsigned>(fields[0]);
      sec.level_num = fields[1];
      sec.level_den = fields[2];
      sec.den = fields[6];
      have_header = true;
    } else if (fields[0] != static_cast<std::int64_t>(sec.order) || fields[1] != sec.level_num || fields[2] != sec.level_den ||
               fields[6] != sec.den) {
      throw ParseError("CSV line " + std::to_string(line_no) + ": inconsistent section header");
    }
    sec.diamonds.push_back({fields[3], fields[4], fields[5]});
  }
  if (!have_header) throw ParseError("CSV: no diamonds");
  std::sort(sec.diamonds.begin(), sec.diamonds.end());
  return sec;
}

std::string dyadic_to_decimal(std::int64_t num, std::int64_t den) {
  if (den <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(den))) {
    throw DomainError("denominator must be a power of two");
  }
  std::string sign = num < 0 ? "-" : "";
  std::uint64_t mag = static_cast<std::uint64_t>(num < 0 ? -num : num);
  const auto uden = static_cast<std::uint64_t>(den);
  std::string out = sign + std::to_string(mag / uden);
  std::uint64_t frac = mag % uden;
  if (frac == 0) return out;
  out += '.';
  while (frac != 0) {
    frac *= 10;
    out += static_cast<char>('0' + frac / uden);
    frac %= uden;
  }
  return out;
}

std::string to_svg(const Pattern& p) {
  const Side m = p.side();
  std::ostringstream out;
  out << kSvgHeader << "viewBox=\"0 0 " << m << ' ' << m << "\">\n";
  out << "<g transform=\"matrix(1 0 0 -1 0 " << m << ")\">\n";
  append_cells(out, p, "black");
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string to_svg(const Section& sec) {
  std::ostringstream out;
  out << kSvgHeader << "viewBox=\"-1 -1 2 2\">\n";
  out << "<g transform=\"matrix(1 0 0 -1 0 0)\" fill=\"black\">\n";
  for (const Diamond& d : sec.diamonds) {
    auto fmt = [&](std::int64_t v) { return dyadic_to_decimal(v, sec.den); };
    out << "<path d=\"M" << fmt(d.cx - d.r) << ',' << fmt(d.cy) << " L" << fmt(d.cx) << ','
        << fmt(d.cy + d.r) << " L" << fmt(d.cx + d.r) << ',' << fmt(d.cy) << " L" << fmt(d.cx)
        << ',' << fmt(d.cy - d.r) << " Z\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string to_grid(const OverlayPattern& o) {
  std::string out;
  out.reserve((static_cast<std::size_t>(o.m) + 1) * o.m);
  for (Index j = o.m; j >= 1; --j) {
    for (Index i = 1; i <= o.m; ++i) {
      const bool blue = o.blue.contains(i, j);
      const bool red = o.red.contains(i, j);
      out += blue && red ? 'X' : blue ? 'B' : red ? 'R' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string to_svg(const OverlayPattern& o) {
  std::ostringstream out;
  out << kSvgHeader << "viewBox=\"0 0 " << o.m << ' ' << o.m << "\">\n";
  out << "<g transform=\"matrix(1 0 0 -1 0 " << o.m << ")\">\n";
  append_cells(out, o.blue, "blue");
  append_cells(out, o.red, "red");
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string to_dot(const PassGraph& g) {
  std::ostringstream out;
  out << "digraph nim_pass {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const auto& [state, outcome] = g.nodes[k];
    out << "  s" << k << " [label=\"" << state.piles[0] << ',' << state.piles[1] << ','
        << state.piles[2] << ',' << state.piles[3] << (state.pass_available ? " +pass" : "")
        << "\", color=" << (outcome == Outcome::p ? "red" : "black") << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  s" << e.from << " -> s" << e.to << (e.is_pass ? " [style=dashed]" : "") << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace choc

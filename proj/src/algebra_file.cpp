#include "tribound/algebra_file.hpp"

#include <cctype>
#include <sstream>
#include <string_view>

#include "tribound/errors.hpp"

namespace tribound {
namespace {

std::string_view strip(std::string_view s, int& column) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++column;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// "<key>=<digits>" at the front of s; advances s and column past it.
int parse_keyed_int(std::string_view& s, std::string_view key, int line, int& column) {
  if (s.substr(0, key.size()) != key || s.size() <= key.size() ||
      s[key.size()] != '=') {
    throw ParseError("expected '" + std::string(key) + "=<int>'", line, column);
  }
  s.remove_prefix(key.size() + 1);
  column += static_cast<int>(key.size()) + 1;
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) {
    throw ParseError("expected unsigned decimal integer after '" +
                         std::string(key) + "='",
                     line, column);
  }
  long value = 0;
  while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
    value = value * 10 + (s.front() - '0');
    if (value > 1'000'000'000) {
      throw ParseError("integer too large", line, column);
    }
    s.remove_prefix(1);
    ++column;
  }
  return static_cast<int>(value);
}

void skip_spaces(std::string_view& s, int& column) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++column;
  }
}

}  // namespace

GradedPresentation parse_algebra_file(const std::string& text) {
  GradedPresentation pres;
  bool have_name = false;
  bool have_field = false;
  bool have_gen = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    int column = 1;
    line = strip(line, column);
    if (line.empty()) {
      continue;
    }

    if (line.substr(0, 5) == "name " || line == "name") {
      if (have_name) {
        throw DuplicateKeyError("duplicate 'name' line", line_no, column);
      }
      if (have_field || have_gen) {
        throw ParseError("'name' must be the first entry", line_no, column);
      }
      int vcol = column + 4;
      std::string_view value = line.size() > 5 ? strip(line.substr(5), vcol)
                                               : std::string_view();
      if (value.empty()) {
        throw ParseError("'name' needs a value", line_no, vcol);
      }
      pres.name = std::string(value);
      have_name = true;
      continue;
    }

    if (line.substr(0, 6) == "field " || line == "field") {
      if (!have_name) {
        throw ParseError("'name' must come before 'field'", line_no, column);
      }
      if (have_field) {
        throw DuplicateKeyError("duplicate 'field' line", line_no, column);
      }
      if (have_gen) {
        throw ParseError("'field' must come before the 'gen' lines", line_no, column);
      }
      int vcol = column + 5;
      std::string_view value = line.size() > 6 ? strip(line.substr(6), vcol)
                                               : std::string_view();
      if (value.empty() || value.find(' ') != std::string_view::npos) {
        throw ParseError("'field' needs a single-token value", line_no, vcol);
      }
      pres.field_label = std::string(value);
      have_field = true;
      continue;
    }

    if (line.substr(0, 4) == "gen " || line == "gen") {
      if (!have_name) {
        throw ParseError("'name' must come before any 'gen' line", line_no, column);
      }
      std::string_view rest = line.size() > 4 ? line.substr(4) : std::string_view();
      int col = column + 4;
      skip_spaces(rest, col);
      Generator g;
      g.degree = parse_keyed_int(rest, "degree", line_no, col);
      skip_spaces(rest, col);
      g.height = parse_keyed_int(rest, "height", line_no, col);
      skip_spaces(rest, col);
      if (!rest.empty()) {
        throw ParseError("trailing content after generator", line_no, col);
      }
      pres.generators.push_back(g);
      have_gen = true;
      continue;
    }

    throw ParseError("unrecognized line (expected name/field/gen)", line_no, column);
  }

  if (!have_name) {
    throw ParseError("missing 'name' line", 1, 1);
  }
  return validate_presentation(std::move(pres));
}

std::string render_algebra_file(const GradedPresentation& pres) {
  std::ostringstream out;
  out << "name " << pres.name << "\n";
  out << "field " << pres.field_label << "\n";
  for (const Generator& g : pres.generators) {
    out << "gen degree=" << g.degree << " height=" << g.height << "\n";
  }
  return out.str();
}

}  // namespace tribound

#include "gridlink/text_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gridlink/error.hpp"

namespace gridlink {
namespace {

struct Token {
  int value;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  if (pos == text.size()) throw ParseError(line, 1, "empty list");
  while (true) {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    const auto digits = text.substr(start, pos - start);
    if (digits.empty() || digits == "-" || digits == "+") {
      throw ParseError(line, start + 1, "expected an integer");
    }
    if (digits.size() > 9) throw ParseError(line, start + 1, "integer too large");
    tokens.push_back({std::stoi(std::string(digits)), start + 1});
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(line, pos + 1, "expected ','");
    ++pos;
  }
  return tokens;
}

}  // namespace

std::vector<int> parse_integer_list(std::string_view text, std::size_t line) {
  std::vector<int> values;
  for (const Token& t : tokenize(text, line)) values.push_back(t.value);
  return values;
}

Permutation parse_permutation(std::string_view text, std::size_t line) {
  const auto tokens = tokenize(text, line);
  const std::size_t size = tokens.size();
  std::vector<bool> seen(size + 1, false);
  std::vector<int> values;
  for (const Token& t : tokens) {
    if (t.value < 1 || static_cast<std::size_t>(t.value) > size) {
      throw ParseError(line, t.column,
                       "entry " + std::to_string(t.value) + " outside 1.." +
                           std::to_string(size));
    }
    if (seen[t.value]) {
      throw ParseError(line, t.column,
                       "duplicate entry " + std::to_string(t.value));
    }
    seen[t.value] = true;
    values.push_back(t.value);
  }
  try {
    return Permutation(std::move(values));
  } catch (const Error& e) {
    throw ParseError(line, text.size() + 1, e.what());
  }
}

GridLink parse_grid_link(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string row;
  for (std::size_t number = 1; std::getline(in, row); ++number) {
    if (!row.empty() && row.back() == '\r') row.pop_back();
    const auto first = row.find_first_not_of(" \t");
    if (first == std::string::npos || row[first] == '#') continue;
    lines.emplace_back(number, row);
  }
  if (lines.size() != 2) {
    throw ParseError(lines.size() < 2 ? lines.size() + 1 : lines[2].first, 1,
                     "expected exactly two permutation lines (sigma, pi)");
  }
  Permutation sigma = parse_permutation(lines[0].second, lines[0].first);
  Permutation pi = parse_permutation(lines[1].second, lines[1].first);
  if (sigma.size() != pi.size()) {
    throw ParseError(lines[1].first, 1,
                     "pi has length " + std::to_string(pi.size()) +
                         " but sigma has length " +
                         std::to_string(sigma.size()));
  }
  return GridLink(std::move(sigma), std::move(pi));
}

GridLink read_grid_link_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_grid_link(buffer.str());
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.at(i));
  }
  return out;
}

std::string format_grid_link(const GridLink& link) {
  return format_permutation(link.sigma()) + "\n" +
         format_permutation(link.pi()) + "\n";
}

}  // namespace gridlink

#include "cli/spec.hpp"

#include <cctype>

#include "flagphase/errors.hpp"

namespace flagphase::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<int> parse_index_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  for (auto part : split(text, ',')) {
    if (part.empty()) throw ParseError("empty entry in index list '" + std::string(text) + "'");
    int value = 0;
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || value > 100000)
        throw ParseError("bad index '" + std::string(part) + "'");
      value = value * 10 + (ch - '0');
    }
    out.push_back(value);
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  text = trim(text);
  if (text.empty()) return out;
  for (auto part : split(text, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const Error& e) {
      throw ParseError("bad rational '" + std::string(part) + "'");
    }
  }
  return out;
}

std::vector<std::vector<Rational>> parse_bundle(std::string_view text) {
  std::vector<std::vector<Rational>> out;
  text = trim(text);
  if (text.empty()) throw ParseError("empty bundle");
  for (auto part : split(text, ';')) {
    if (part.empty()) throw ParseError("empty summand in bundle '" + std::string(text) + "'");
    out.push_back(parse_rational_list(part));
  }
  return out;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("bad integer '" + std::string(text) + "'");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad integer '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

std::string format_index_list(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string format_rational_list(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += to_string(xs[i]);
  }
  return out;
}

std::string format_bundle(const std::vector<std::vector<Rational>>& summands) {
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) out += ";";
    out += format_rational_list(summands[i]);
  }
  return out;
}

FlagSpec FlagSpec::parse(std::string_view type, std::string_view parabolic, std::string_view omega) {
  FlagSpec spec;
  spec.type = std::string(trim(type));
  if (spec.type.empty()) throw ParseError("missing Cartan type");
  spec.parabolic = parse_index_list(parabolic);
  spec.omega = parse_rational_list(omega);
  return spec;
}

std::string FlagSpec::format() const {
  return type + "|" + format_index_list(parabolic) + "|" + format_rational_list(omega);
}

FlagSpec FlagSpec::parse_formatted(std::string_view text) {
  const auto parts = split(text, '|');
  if (parts.size() != 3) throw ParseError("expected 'type|parabolic|omega', got '" + std::string(text) + "'");
  return parse(parts[0], parts[1], parts[2]);
}

}  // namespace flagphase::cli

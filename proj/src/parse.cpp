#include "lfactor/parse.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lfac {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_positive(const std::string& s, const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 1) fail("bad " + what + " '" + s + "'");
  return v;
}

struct Token {
  std::string text;
  int line, column;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  for (int ln = 1; std::getline(in, raw); ++ln) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::vector<Token> toks;
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      toks.push_back({raw.substr(i, j - i), ln, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

[[noreturn]] void fail_at(const Token& t, const std::string& msg) {
  fail("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + msg);
}

std::int64_t token_int(const Token& t) {
  std::int64_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  if (*b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) fail_at(t, "expected an integer, got '" + t.text + "'");
  return v;
}

std::int64_t header(const std::vector<Token>& line, const std::string& key, std::int64_t min) {
  if (line[0].text != key) fail_at(line[0], "expected '" + key + "'");
  if (line.size() != 2) fail_at(line[0], "expected '" + key + " <count>'");
  auto v = token_int(line[1]);
  if (v < min) fail_at(line[1], key + " must be at least " + std::to_string(min));
  return v;
}

Rational parse_rational(const std::string& s) {
  auto parts = split(s, '/');
  if (parts.size() > 2) fail("bad rational '" + s + "'");
  auto integer = [&](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) fail("bad rational '" + s + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) fail("bad rational '" + s + "'");
    return BigInt(t[0] == '+' ? t.substr(1) : t);
  };
  BigInt num = integer(parts[0]);
  BigInt den = parts.size() == 2 ? integer(parts[1]) : BigInt(1);
  if (den == 0) fail("zero denominator in '" + s + "'");
  return Rational(num, den);
}

}  // namespace

RootDatum parse_datum_text(const std::string& text, const std::string& label) {
  auto lines = tokenize_lines(text);
  if (lines.size() < 2) fail("datum file needs 'rank' and 'simples' lines");
  const auto k = header(lines[0], "rank", 0);
  const auto m = header(lines[1], "simples", 0);
  if (lines.size() != static_cast<std::size_t>(2 + 2 * m)) {
    const auto& t = lines.size() > static_cast<std::size_t>(2 + 2 * m) ? lines[2 + 2 * m][0] : lines.back().back();
    fail_at(t, "expected " + std::to_string(2 * m) + " vector lines, found " + std::to_string(lines.size() - 2));
  }
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;
  for (std::int64_t i = 0; i < 2 * m; ++i) {
    const auto& line = lines[2 + i];
    if (static_cast<std::int64_t>(line.size()) != k)
      fail_at(line[0], "expected " + std::to_string(k) + " integers, found " + std::to_string(line.size()));
    Vec v;
    for (const auto& t : line) v.push_back(token_int(t));
    if (i < m)
      roots.emplace_back(v);
    else
      coroots.emplace_back(v);
  }
  return RootDatum::build(static_cast<int>(k), roots, coroots, label);
}

RootDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open datum file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum_text(ss.str(), path);
}

RootDatum parse_group(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return load_datum_file(spec.substr(1));
  auto parts = split(spec, ':');
  if (parts[0] == "gl" && parts.size() == 2) return gl(parse_positive(parts[1], "gl size"));
  if (parts[0] == "gsp" && parts.size() == 2) {
    int two_n = parse_positive(parts[1], "gsp size");
    if (two_n % 2) fail("gsp needs an even size, got " + parts[1]);
    return gsp(two_n);
  }
  if (parts[0] == "simple" && parts.size() == 4) {
    if (parts[1].size() != 1) fail("bad simple type '" + parts[1] + "'");
    Isogeny iso;
    if (parts[3] == "adj")
      iso = Isogeny::Adjoint;
    else if (parts[3] == "sc")
      iso = Isogeny::SimplyConnected;
    else
      fail("isogeny must be adj or sc, got '" + parts[3] + "'");
    return simple(parts[1][0], parse_positive(parts[2], "rank"), iso);
  }
  fail("unrecognized group '" + spec + "' (expected gl:n, gsp:2n, simple:X:r:adj|sc or @file)");
}

UnramifiedCharacter parse_character(const std::string& spec, int rank) {
  if (spec == "generic") return UnramifiedCharacter::generic();
  std::vector<Rational> values;
  for (const auto& p : split(spec, ',')) values.push_back(parse_rational(p));
  if (static_cast<int>(values.size()) != rank)
    fail("character has " + std::to_string(values.size()) + " values, group rank is " + std::to_string(rank));
  return UnramifiedCharacter::numeric(std::move(values));
}

}  // namespace lfac

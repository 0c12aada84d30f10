#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Input handling for the command line tool: UTF-8 text in, element
// sequences out. Positions in errors are 1-based; columns count bytes
// except in codepoint decoding, where they count decoded codepoints.
namespace seqdist::cli {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw std::runtime_error("failed reading input file: " + path);
  }
  return std::move(buffer).str();
}

// Text editors terminate the last line; that terminator is not part of the
// sequence. Removes at most one trailing newline.
inline std::string_view strip_trailing_newline(std::string_view text) {
  if (text.ends_with("\r\n")) {
    text.remove_suffix(2);
  } else if (text.ends_with('\n')) {
    text.remove_suffix(1);
  }
  return text;
}

// Strict UTF-8 decoding, one codepoint per element. Rejects overlong forms,
// surrogates, values past U+10FFFF and truncated sequences.
inline std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1Fu;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0Fu;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07u;
      len = 4;
    } else {
      throw ParseError(line, column, "malformed UTF-8 lead byte");
    }
    if (i + len > text.size()) {
      throw ParseError(line, column, "truncated UTF-8 sequence");
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) {
        throw ParseError(line, column, "malformed UTF-8 continuation byte");
      }
      cp = (cp << 6) | (bk & 0x3Fu);
    }
    constexpr char32_t kMinForLength[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len]) {
      throw ParseError(line, column, "overlong UTF-8 encoding");
    }
    if (cp >= 0xD800 && cp <= 0xDFFF) {
      throw ParseError(line, column, "UTF-8 encodes a surrogate codepoint");
    }
    if (cp > 0x10FFFF) {
      throw ParseError(line, column, "codepoint past U+10FFFF");
    }
    out.push_back(cp);
    i += len;
    if (cp == U'\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return out;
}

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> split_tokens(std::string_view text) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  };
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
      continue;
    }
    const std::size_t start = i;
    const Token token{{}, line, column};
    while (i < text.size() && !is_space(text[i])) {
      ++i;
      ++column;
    }
    tokens.push_back({text.substr(start, i - start), token.line, token.column});
  }
  return tokens;
}

inline std::vector<std::string> parse_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : split_tokens(text)) out.emplace_back(t.text);
  return out;
}

inline std::vector<std::int64_t> parse_ints(std::string_view text) {
  std::vector<std::int64_t> out;
  for (const Token& t : split_tokens(text)) {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
      throw ParseError(t.line, t.column,
                       "not an integer: \"" + std::string(t.text) + "\"");
    }
    out.push_back(value);
  }
  return out;
}

inline std::vector<double> parse_floats(std::string_view text) {
  std::vector<double> out;
  for (const Token& t : split_tokens(text)) {
    double value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
      throw ParseError(t.line, t.column,
                       "not a number: \"" + std::string(t.text) + "\"");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace seqdist::cli

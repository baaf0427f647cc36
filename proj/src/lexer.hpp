#pragma once

#include <cctype>
#include <cstddef>
#include <deque>
#include <string>
#include <string_view>

#include "gdep/errors.hpp"

namespace gdep::detail {

enum class Tok {
  kIdent,
  kLParen,
  kRParen,
  kComma,
  kSemi,
  kDot,
  kAmp,
  kPipe,
  kTilde,
  kEq,
  kNeq,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 1-based offset into the input
};

inline bool ident_char(char c) {
  if (std::isspace(static_cast<unsigned char>(c))) return false;
  switch (c) {
    case '(':
    case ')':
    case ',':
    case ';':
    case '.':
    case '&':
    case '|':
    case '~':
    case '=':
    case '!':
      return false;
    default:
      return true;
  }
}

// Shared scanner for atom and formula text.
class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  const Token& peek(std::size_t ahead = 0) {
    while (buffer_.size() <= ahead) buffer_.push_back(scan());
    return buffer_[ahead];
  }

  Token next() {
    peek();
    Token t = buffer_.front();
    buffer_.pop_front();
    return t;
  }

 private:
  Token scan() {
    while (offset_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[offset_]))) {
      ++offset_;
    }
    const std::size_t pos = offset_ + 1;
    if (offset_ >= input_.size()) return {Tok::kEnd, "", pos};
    const char c = input_[offset_];
    switch (c) {
      case '(': ++offset_; return {Tok::kLParen, "(", pos};
      case ')': ++offset_; return {Tok::kRParen, ")", pos};
      case ',': ++offset_; return {Tok::kComma, ",", pos};
      case ';': ++offset_; return {Tok::kSemi, ";", pos};
      case '.': ++offset_; return {Tok::kDot, ".", pos};
      case '&': ++offset_; return {Tok::kAmp, "&", pos};
      case '|': ++offset_; return {Tok::kPipe, "|", pos};
      case '~': ++offset_; return {Tok::kTilde, "~", pos};
      case '=': ++offset_; return {Tok::kEq, "=", pos};
      case '!':
        if (offset_ + 1 < input_.size() && input_[offset_ + 1] == '=') {
          offset_ += 2;
          return {Tok::kNeq, "!=", pos};
        }
        throw SyntaxError("stray '!'", pos);
      default:
        break;
    }
    std::size_t end = offset_;
    while (end < input_.size() && ident_char(input_[end])) ++end;
    Token t{Tok::kIdent, std::string(input_.substr(offset_, end - offset_)), pos};
    offset_ = end;
    return t;
  }

  std::string_view input_;
  std::size_t offset_ = 0;
  std::deque<Token> buffer_;
};

}  // namespace gdep::detail

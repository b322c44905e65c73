#pragma once

// Small cursor used by the canonical text parsers.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "crosswire/error.hpp"

namespace crosswire::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect(std::string_view word) {
    for (char c : word) expect(c);
  }

  std::int64_t integer() {
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    // from_chars does not accept a leading '+', which keeps the form canonical.
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void finish() {
    if (!done()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace crosswire::detail

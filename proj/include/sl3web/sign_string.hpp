#pragma once

#include <cassert>
#include <cstddef>
#include <string>

#include "sl3web/errors.hpp"

namespace sl3web {

/// A finite (possibly empty) string over {+, -}.
///
/// Sign strings are the objects of both categories handled by this library;
/// concatenation is their monoid operation and the empty string is the unit.
class SignString {
 public:
  SignString() = default;

  explicit SignString(std::string signs) : signs_(std::move(signs)) {
    for (char c : signs_) {
      if (c != '+' && c != '-') throw Error("sign string may contain only '+' and '-'");
    }
  }

  static SignString empty() { return SignString(); }

  std::size_t size() const { return signs_.size(); }
  bool is_empty() const { return signs_.empty(); }

  /// 0-based access.
  char at(std::size_t i) const {
    assert(i < signs_.size());
    return signs_[i];
  }

  SignString slice(std::size_t from, std::size_t len) const {
    return SignString(signs_.substr(from, len));
  }
  SignString slice_from(std::size_t from) const { return SignString(signs_.substr(from)); }

  friend SignString operator+(const SignString& a, const SignString& b) {
    return SignString(a.signs_ + b.signs_);
  }

  friend bool operator==(const SignString& a, const SignString& b) = default;
  friend auto operator<=>(const SignString& a, const SignString& b) = default;

  /// Raw form, e.g. "+-+" ("" for the unit).
  const std::string& str() const { return signs_; }

 private:
  std::string signs_;
};

inline SignString sign_string(const char* s) { return SignString(std::string(s)); }

}  // namespace sl3web

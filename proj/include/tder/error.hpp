#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace tder {

// Malformed input: bad grammar, unknown names, inconsistent sizes.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation's precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical "no" (relator fails, subset dependent, ...).
struct Rejection {
  std::string reason;
  std::string detail;
};

template <class T>
class Expected {
 public:
  Expected(T value) : v_(std::move(value)) {}
  Expected(Rejection r) : v_(std::move(r)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() {
    if (!ok()) throw DomainError("rejected: " + rejection().reason);
    return std::get<0>(v_);
  }
  const T& value() const {
    if (!ok()) throw DomainError("rejected: " + rejection().reason);
    return std::get<0>(v_);
  }
  T& operator*() { return value(); }
  const T& operator*() const { return value(); }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }

  const Rejection& rejection() const { return std::get<1>(v_); }

 private:
  std::variant<T, Rejection> v_;
};

}  // namespace tder

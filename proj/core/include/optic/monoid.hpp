// monoid.hpp

#pragma once

#include <functional>
#include <string>

#include "optic/val.hpp"

namespace optic {

// A named monoid on Vals: identity element plus an associative combine.
class Monoid {
public:
  Monoid(std::string name, Val identity, std::function<Val(const Val&, const Val&)> combine)
      : name_(std::move(name)), identity_(std::move(identity)), combine_(std::move(combine)) {}

  const std::string& name() const { return name_; }
  const Val& identity() const { return identity_; }
  Val combine(const Val& a, const Val& b) const { return combine_(a, b); }

  static Monoid list();   // List concatenation, identity ()
  static Monoid sum();    // wrapping 64-bit addition, identity 0
  static Monoid max();    // integer maximum, identity INT64_MIN
  static Monoid first();  // keep the first written value; carrier () or (x)

private:
  std::string name_;
  Val identity_;
  std::function<Val(const Val&, const Val&)> combine_;
};

}  // namespace optic

#include "optic/monoid.hpp"

#include <limits>

namespace optic {

Monoid Monoid::list() {
  return Monoid("list", Val::list({}), [](const Val& a, const Val& b) {
    std::vector<Val> out = a.items();
    out.insert(out.end(), b.items().begin(), b.items().end());
    return Val::list(std::move(out));
  });
}

Monoid Monoid::sum() {
  return Monoid("sum", Val::integer(0), [](const Val& a, const Val& b) {
    return Val::integer(wrap_add(a.int_value(), b.int_value()));
  });
}

Monoid Monoid::max() {
  return Monoid("max", Val::integer(std::numeric_limits<std::int64_t>::min()),
                [](const Val& a, const Val& b) {
                  return a.int_value() >= b.int_value() ? a : b;
                });
}

Monoid Monoid::first() {
  return Monoid("first", Val::list({}), [](const Val& a, const Val& b) {
    return a.items().empty() ? b : a;
  });
}

}  // namespace optic

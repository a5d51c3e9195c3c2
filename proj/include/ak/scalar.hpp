#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ak/errors.hpp"

namespace ak {

/// Exact rational, always in lowest terms with positive denominator.
using Scalar = mpq_class;

/// Parses "p", "p/q" or "-p/q". Surrounding whitespace is ignored.
inline Scalar parse_scalar(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw Error(ErrorKind::Parse, "empty rational");
  std::string s(text.substr(first, last - first + 1));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  bool ok = slash == std::string::npos
                ? digits_ok(s, true)
                : digits_ok(std::string_view(s).substr(0, slash), true) &&
                      digits_ok(std::string_view(s).substr(slash + 1), false);
  if (!ok) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  Scalar q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Scalar& q) { return q.get_str(); }

}  // namespace ak

#pragma once

#include <optional>

namespace incalg {

/// A yes/no answer carrying a witness whenever the answer is no.
template <class Witness>
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

}  // namespace incalg

#pragma once

// Truncation policy and the shell-by-shell double-series engine shared by
// kdf, the catalog left sides and the general-relation right side.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperverify/errors.hpp"
#include "hyperverify/numkernel.hpp"

namespace hyperverify {

struct TruncationPolicy {
  int initial_shell = 24;
  int max_shell = 192;
  double tail_tol = 1e-14;
  /// Budget for the accumulated a-priori rounding bound, relative to the scale.
  double noise_tol = 1e-9;
  /// Convergence is never declared before this many shells/terms.
  int min_shell = 4;

  /// Defaults, with max_shell taken from HYPERVERIFY_MAX_SHELL when set.
  static TruncationPolicy from_environment();

  /// Throws std::invalid_argument when the invariants do not hold.
  void validate() const;
};

struct SeriesDiagnostics {
  int order_used = 0;           // last shell (or term index) summed
  double tail_estimate = 0.0;   // largest recent contribution above its rounding bound
  double rounding_estimate = 0.0;
  bool converged = false;
};

struct SeriesResult {
  Complex value;
  SeriesDiagnostics diagnostics;
};

/// Rounding bound per unit of sum|t| inside one shell; each term is a product
/// of a few dozen rounded factors.
inline constexpr double kShellRoundingFactor = 8.0 * std::numeric_limits<double>::epsilon();

/// One shell m + n = N as handed to sum_shells().
struct ShellSum {
  Complex value;
  double magnitude = 0.0;  // sum |t| over the shell
  double rounding = 0.0;   // a-priori rounding bound for `value`
};

/// Shell N of a source with binary64 terms `term(m, n)`.
template <class Source>
ShellSum sum_shell_terms(const Source& source, int shell) {
  num::ComplexAccumulator sum;
  double magnitude = 0.0;
  for (int m = shell; m >= 0; --m) {
    const Complex t = source.term(m, shell - m);
    sum.add(t);
    magnitude += std::abs(t);
  }
  return {sum.value(), magnitude, kShellRoundingFactor * magnitude};
}

/// Sums shells N = 0, 1, 2, ... given by `source.shell(N)`.
///
/// `source.reserve(N)` is called whenever the shell cap grows (initial_shell,
/// then doubling up to max_shell) so the source can size its tables.
/// Convergence: the last three shells each lie within
/// tail_tol * max(1, |S|) plus their own rounding bound, and the accumulated
/// rounding bound stays within noise_tol * max(1, |S|). Summation stops as
/// soon as that holds, or once the accumulated rounding bound exceeds the
/// noise budget (further shells could only add noise).
template <class Source>
SeriesResult sum_shells(Source& source, const TruncationPolicy& policy) {
  policy.validate();
  num::ComplexAccumulator total;
  SeriesDiagnostics diag;
  double recent_excess[3] = {0.0, 0.0, 0.0};
  bool recent_small[3] = {false, false, false};

  int cap = std::min(policy.initial_shell, policy.max_shell);
  source.reserve(cap);
  for (int shell = 0;; ++shell) {
    if (shell > cap) {
      if (cap >= policy.max_shell) break;
      cap = std::min(cap * 2, policy.max_shell);
      source.reserve(cap);
    }
    const ShellSum s = source.shell(shell);
    total.add(s.value);
    diag.order_used = shell;

    diag.rounding_estimate += s.rounding;
    const double scale = std::max(1.0, std::abs(total.value()));
    const double excess = std::max(0.0, std::abs(s.value) - s.rounding);

    std::rotate(recent_excess, recent_excess + 1, recent_excess + 3);
    std::rotate(recent_small, recent_small + 1, recent_small + 3);
    recent_excess[2] = excess;
    recent_small[2] = excess <= policy.tail_tol * scale;

    const bool noise_ok = diag.rounding_estimate <= policy.noise_tol * scale;
    diag.tail_estimate = std::max({recent_excess[0], recent_excess[1], recent_excess[2]});
    if (shell >= std::max(policy.min_shell, 2) && recent_small[0] && recent_small[1] &&
        recent_small[2]) {
      diag.converged = noise_ok;
      break;
    }
    if (!noise_ok) break;
  }
  return {total.value(), diag};
}

/// Throws TailTooLarge unless `r` converged; returns it otherwise.
SeriesResult require_converged(const SeriesResult& r, const std::string& what);

}  // namespace hyperverify

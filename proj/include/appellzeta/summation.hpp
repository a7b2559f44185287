#pragma once

// Anti-diagonal summation engine for the bilateral double sums and their
// single-sum analogues. The series involved are asymptotic: diagonal
// magnitudes fall to a parameter-dependent minimum and then regrow, so the
// engine combines a small-terms convergence rule with optimal truncation at
// the observed minimum and a divergence detector for runaway growth.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "appellzeta/complexmp.hpp"
#include "appellzeta/errors.hpp"
#include "appellzeta/params.hpp"
#include "appellzeta/real.hpp"

namespace appellzeta {

struct SumCaps {
  long max_diagonals = 400;
};

struct SumResult {
  APComplex value;        // accepted partial sum (best available on failure)
  long diagonals_used = 0;
  Real max_term;          // largest diagonal magnitude seen
  Real tail_estimate;     // bound on the relative size of the omitted tail
  bool converged = false;
  std::string note;       // one-line reason for the stopping decision
};

using DoubleSummand = std::function<APComplex(long n, long p, const Params&)>;
using SingleSummand = std::function<APComplex(long n, const Params&)>;

namespace detail {

// Shared driver: `diagonal(d)` returns the d-th anti-diagonal (double sums)
// or the d-th term (single sums). Stopping rules, in priority order per
// diagonal:
//   1. small-terms: three consecutive diagonals each below
//      tol * max(1, |partial|) accept the full partial sum (zero diagonals
//      count toward the streak; at least three diagonals are always taken);
//   2. divergence: past d = 20, a diagonal exceeding 10^6 times the largest
//      magnitude seen so far abandons the sum as divergent;
//   3. regrowth: past d = 10, three consecutive strict increases ending at
//      least 10x above the observed minimum truncate at the minimum; the
//      result converged only if the first diagonal omitted by that truncation
//      already met the tolerance (a single anomalously small diagonal -- a
//      cancellation or sign-change artifact -- certifies nothing about the
//      tail, so the bound is taken from the diagonal after the minimum).
// Exhausting the diagonal budget raises ConvergenceError unless the best
// truncation point had already met the tolerance.
inline SumResult run_diagonal_sum(const std::function<APComplex(long)>& diagonal,
                                  const Real& tol, const SumCaps& caps) {
  if (caps.max_diagonals < 3)
    throw ContractError("summation: max_diagonals must be at least 3");

  SumResult res;
  res.max_term = Real(0);
  res.tail_estimate = Real(0);

  APComplex partial(Real(0));
  APComplex best_partial(Real(0));
  Real min_mag(-1);          // smallest nonzero diagonal magnitude so far
  Real after_min_mag(-1);    // first nonzero magnitude after the minimum
  long best_d = -1;
  Real prev_mag(-1);         // previous nonzero diagonal magnitude
  Real last3_max(0);         // largest magnitude within the current small streak
  int small_streak = 0;
  int growth_streak = 0;

  const Real one(1);
  for (long d = 0; d < caps.max_diagonals; ++d) {
    APComplex diag;
    try {
      diag = diagonal(d);
    } catch (const PoleError& err) {
      res.diagonals_used = d;
      res.converged = false;
      res.value = partial;
      res.note = std::string("summand pole: ") + err.what();
      return res;
    }
    const Real mag = abs(diag);
    partial += diag;
    res.diagonals_used = d + 1;

    // rule 2: runaway growth
    if (d > 20 && res.max_term > 0 && mag > Real(1000000) * res.max_term) {
      res.converged = false;
      res.value = (best_d >= 0) ? best_partial : partial;
      res.note = "divergent: diagonal " + std::to_string(d) +
                 " exceeds 10^6 times the largest earlier diagonal";
      return res;
    }
    if (mag > res.max_term) res.max_term = mag;

    // rule 1: three consecutive small diagonals
    const Real scale = std::max(one, abs(partial));
    if (mag < tol * scale) {
      if (mag > last3_max || small_streak == 0) last3_max = mag;
      ++small_streak;
      if (small_streak >= 3 && d >= 2) {
        res.converged = true;
        res.value = partial;
        res.tail_estimate = last3_max / scale;
        res.note = "converged: three consecutive small diagonals ending at d=" +
                   std::to_string(d);
        return res;
      }
    } else {
      small_streak = 0;
      last3_max = Real(0);
    }

    // rule 3 bookkeeping ignores exactly-zero diagonals so that structural
    // zeros (vanishing Pochhammer factors, parity cancellations) neither
    // reset the minimum nor fake a growth reversal
    if (!mag.is_zero()) {
      if (min_mag < 0 || mag < min_mag) {
        min_mag = mag;
        after_min_mag = Real(-1);
        best_partial = partial;
        best_d = d;
        growth_streak = 0;
      } else {
        if (after_min_mag < 0) after_min_mag = mag;
        if (prev_mag >= 0 && mag > prev_mag && d > 10)
          ++growth_streak;
        else
          growth_streak = 0;
      }
      prev_mag = mag;

      if (growth_streak >= 3 && min_mag >= 0 && mag > Real(10) * min_mag) {
        // truncating after best_d omits a tail whose leading magnitude is the
        // first nonzero diagonal past the minimum
        const Real omitted = after_min_mag >= 0 ? after_min_mag : min_mag;
        const Real best_scale = std::max(one, abs(best_partial));
        res.value = best_partial;
        res.diagonals_used = best_d + 1;
        res.tail_estimate = omitted / best_scale;
        res.converged = res.tail_estimate < tol;
        res.note = res.converged
                       ? "converged: truncated at the minimum diagonal d=" +
                             std::to_string(best_d)
                       : "not convergent: the tail at the minimum diagonal d=" +
                             std::to_string(best_d) +
                             " is above tolerance before regrowth";
        return res;
      }
    }
  }

  // budget exhausted: accept the optimal truncation point if it already met
  // the tolerance, otherwise report failure to converge
  if (best_d >= 0) {
    const Real omitted = after_min_mag >= 0 ? after_min_mag : min_mag;
    const Real best_scale = std::max(one, abs(best_partial));
    if (omitted < tol * best_scale) {
      res.value = best_partial;
      res.diagonals_used = best_d + 1;
      res.tail_estimate = omitted / best_scale;
      res.converged = true;
      res.note = "converged: diagonal budget ended past an acceptable minimum at d=" +
                 std::to_string(best_d);
      return res;
    }
  }
  throw ConvergenceError("summation: diagonal budget of " +
                         std::to_string(caps.max_diagonals) +
                         " exhausted before the tolerance was met");
}

}  // namespace detail

inline SumResult sum_double(const DoubleSummand& summand, const Params& params,
                            const Real& tol, const SumCaps& caps = {}) {
  return detail::run_diagonal_sum(
      [&](long d) {
        APComplex acc(Real(0));
        for (long n = 0; n <= d; ++n) acc += summand(n, d - n, params);
        return acc;
      },
      tol, caps);
}

inline SumResult sum_single(const SingleSummand& summand, const Params& params,
                            const Real& tol, const SumCaps& caps = {}) {
  return detail::run_diagonal_sum([&](long d) { return summand(d, params); }, tol,
                                  caps);
}

}  // namespace appellzeta

#pragma once

#include <cstddef>
#include <vector>

#include "ifaudit/consistency.hpp"

namespace ifaudit {

/// Finite search box for the counterexample miner.
///
/// Every denominator year takes a publication count in 0..pub_max and every
/// numerator cell a citation count in 0..cit_max, for both journals.
/// Injections are single-year, k in 1..k_max, over the denominator years of
/// the spec. With `equal_pubs` set the right journal shares the left one's
/// publication vector.
struct SearchBounds {
  int n = 2;
  Count pub_max = 1;
  Count cit_max = 1;
  Count k_max = 1;
  Year target_year = 2010;
  int s = 0;
  bool equal_pubs = false;

  IndicatorSpec spec(IndicatorKind kind) const {
    return IndicatorSpec::make(kind, n, target_year, s);
  }
};

struct MineOptions {
  std::size_t limit = 10;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Exhaustively enumerates journal pairs inside `bounds` and returns up to
/// `limit` Z-consistency violations.
///
/// Enumeration order is lexicographic over (left pubs, left cits, right pubs,
/// right cits, injection year, k), with denominator years in window order.
/// Only pairs whose left tuple precedes the right tuple are visited, so each
/// mirrored pair appears once. One witness per pair: the first reversing
/// injection. The result equals the first `limit` witnesses of that order
/// regardless of the thread count, and each one has been re-verified through
/// check_z_consistency.
std::vector<ReversalWitness> mine_counterexamples(IndicatorKind kind,
                                                  const SearchBounds& bounds,
                                                  const MineOptions& options = {});

}  // namespace ifaudit

#pragma once

// Test-only reference evaluation on boost::rational. Shares no code with the
// library's Ratio or indicator paths.

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

namespace oracle {

using Q = boost::rational<long long>;

// Window vectors are indexed i = 0..n-1 for years Y-1..Y-n.
inline Q roa(const std::vector<long long>& pubs, const std::vector<long long>& cits) {
  long long c = 0;
  long long p = 0;
  for (std::size_t i = 0; i < pubs.size(); ++i) {
    c += cits[i];
    p += pubs[i];
  }
  return Q(c, p);
}

inline Q aor(const std::vector<long long>& pubs, const std::vector<long long>& cits) {
  Q sum(0);
  for (std::size_t i = 0; i < pubs.size(); ++i) sum += Q(cits[i], pubs[i]);
  return sum / static_cast<long long>(pubs.size());
}

inline std::vector<long long> add_at(std::vector<long long> pubs, std::size_t slot, long long k) {
  pubs[slot] += k;
  return pubs;
}

}  // namespace oracle

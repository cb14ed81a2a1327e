#include "ifaudit/miner.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ifaudit/errors.hpp"

namespace ifaudit {
namespace {

// Unreduced fraction; den == 0 marks an undefined value.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 0;
  bool defined() const noexcept { return den != 0; }
};

int compare(const Frac& a, const Frac& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// One journal inside the search box: publication counts per denominator
// year followed by citation counts per numerator cell.
struct Tuple {
  std::vector<Count> pubs;
  std::vector<Count> cits;
};

class Layout {
 public:
  Layout(IndicatorKind kind, const SearchBounds& bounds)
      : kind_(kind),
        spec_(bounds.spec(kind)),
        years_(denominator_years(spec_)),
        keys_(numerator_keys(spec_)),
        pub_radix_(static_cast<std::uint64_t>(bounds.pub_max) + 1),
        cit_radix_(static_cast<std::uint64_t>(bounds.cit_max) + 1) {
    pub_space_ = power(pub_radix_, years_.size());
    cit_space_ = power(cit_radix_, keys_.size());
    if (__builtin_mul_overflow(pub_space_, cit_space_, &size_) || size_ > (1ULL << 62)) {
      throw InvalidArgument("search space too large");
    }
    check_value_range(bounds);
  }

  const IndicatorSpec& spec() const noexcept { return spec_; }
  const std::vector<Year>& years() const noexcept { return years_; }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t cit_space() const noexcept { return cit_space_; }

  // Most significant digit first, pubs before cits: index order is the
  // lexicographic order of (pubs, cits).
  Tuple decode(std::uint64_t index) const {
    Tuple t{std::vector<Count>(years_.size()), std::vector<Count>(keys_.size())};
    for (std::size_t i = keys_.size(); i-- > 0;) {
      t.cits[i] = static_cast<Count>(index % cit_radix_);
      index /= cit_radix_;
    }
    for (std::size_t i = years_.size(); i-- > 0;) {
      t.pubs[i] = static_cast<Count>(index % pub_radix_);
      index /= pub_radix_;
    }
    return t;
  }

  // Value with `k` extra publications in denominator slot `slot`.
  Frac evaluate(const Tuple& t, std::size_t slot = 0, Count k = 0) const noexcept {
    switch (kind_) {
      case IndicatorKind::SyncRoa:
      case IndicatorKind::Diachronous: {
        std::int64_t num = 0;
        std::int64_t den = k;
        for (Count c : t.cits) num += c;
        for (Count p : t.pubs) den += p;
        return den == 0 ? Frac{} : Frac{num, den};
      }
      case IndicatorKind::SyncAor: {
        std::int64_t num = 0;
        std::int64_t den = 1;
        for (std::size_t i = 0; i < t.pubs.size(); ++i) {
          const std::int64_t p = t.pubs[i] + (i == slot ? k : 0);
          if (p == 0) return Frac{};
          num = num * p + t.cits[i] * den;
          den *= p;
        }
        return Frac{num, den * static_cast<std::int64_t>(t.pubs.size())};
      }
    }
    return Frac{};
  }

  JournalData to_journal(const Tuple& t, std::string id) const {
    JournalData j(std::move(id));
    for (std::size_t i = 0; i < years_.size(); ++i) j.set_pubs(years_[i], t.pubs[i]);
    for (std::size_t i = 0; i < keys_.size(); ++i) j.set_cits(keys_[i].citing, keys_[i].cited, t.cits[i]);
    return j;
  }

 private:
  static std::uint64_t power(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      if (__builtin_mul_overflow(out, base, &out)) throw InvalidArgument("search space too large");
    }
    return out;
  }

  void check_value_range(const SearchBounds& b) const {
    const long double p = static_cast<long double>(b.pub_max) + static_cast<long double>(b.k_max);
    const long double c = static_cast<long double>(b.cit_max);
    const long double n = static_cast<long double>(keys_.size());
    const long double worst = kind_ == IndicatorKind::SyncAor
                                  ? std::pow(p, n) * n * (c + 1.0L)
                                  : (c + p) * (n + 1.0L);
    if (worst > 0x1p62L) throw InvalidArgument("search bounds exceed exact 64-bit evaluation range");
  }

  IndicatorKind kind_;
  IndicatorSpec spec_;
  std::vector<Year> years_;
  std::vector<CitationKey> keys_;
  std::uint64_t pub_radix_;
  std::uint64_t cit_radix_;
  std::uint64_t pub_space_ = 1;
  std::uint64_t cit_space_ = 1;
  std::uint64_t size_ = 1;
};

struct Hit {
  std::uint64_t right;
  std::size_t slot;
  Count k;
};

// All hits with this left tuple, in enumeration order, at most `cap`.
std::vector<Hit> scan_left(const Layout& layout, const SearchBounds& bounds, std::uint64_t left,
                           std::size_t cap, const std::atomic<bool>& stop) {
  std::vector<Hit> hits;
  const Tuple lt = layout.decode(left);
  const Frac l0 = layout.evaluate(lt);
  if (!l0.defined()) return hits;

  const std::size_t slots = layout.years().size();
  const auto k_max = static_cast<std::size_t>(bounds.k_max);
  std::vector<Frac> l_after(slots * k_max);
  for (std::size_t d = 0; d < slots; ++d) {
    for (std::size_t k = 1; k <= k_max; ++k) {
      l_after[d * k_max + (k - 1)] = layout.evaluate(lt, d, static_cast<Count>(k));
    }
  }

  std::uint64_t begin = left + 1;
  std::uint64_t end = layout.size();
  if (bounds.equal_pubs) {
    const std::uint64_t block = left - left % layout.cit_space();
    end = block + layout.cit_space();
  }

  for (std::uint64_t right = begin; right < end; ++right) {
    if ((right & 0xfff) == 0 && stop.load(std::memory_order_relaxed)) return {};
    const Tuple rt = layout.decode(right);
    const Frac r0 = layout.evaluate(rt);
    if (!r0.defined()) continue;
    const int before = compare(l0, r0);
    if (before == 0) continue;
    bool found = false;
    for (std::size_t d = 0; d < slots && !found; ++d) {
      for (std::size_t k = 1; k <= k_max; ++k) {
        const int after = compare(l_after[d * k_max + (k - 1)],
                                  layout.evaluate(rt, d, static_cast<Count>(k)));
        if (after != 0 && after != before) {
          hits.push_back({right, d, static_cast<Count>(k)});
          found = true;
          break;
        }
      }
    }
    if (hits.size() >= cap) break;
  }
  return hits;
}

ReversalWitness materialize(const Layout& layout, std::uint64_t left, const Hit& hit) {
  PairScenario scenario{layout.to_journal(layout.decode(left), "left"),
                        layout.to_journal(layout.decode(hit.right), "right"), layout.spec(),
                        Injection::single(layout.years()[hit.slot], hit.k)};
  Verdict verdict = check_z_consistency(scenario);
  if (verdict.tag != VerdictTag::Reversed) {
    throw std::logic_error("miner produced a witness that does not re-verify");
  }
  return ReversalWitness{std::move(scenario), std::move(verdict)};
}

void validate(const SearchBounds& b) {
  if (b.n < 1 || b.pub_max < 1 || b.cit_max < 1 || b.k_max < 1) {
    throw InvalidArgument("search bounds must all be >= 1");
  }
}

}  // namespace

std::vector<ReversalWitness> mine_counterexamples(IndicatorKind kind, const SearchBounds& bounds,
                                                  const MineOptions& options) {
  validate(bounds);
  if (options.limit == 0) throw InvalidArgument("limit must be >= 1");
  const Layout layout(kind, bounds);

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, threads);

  // Left indices are claimed in increasing order. Once the completed prefix
  // [0, frontier) holds `limit` hits, nothing at or past the frontier can
  // enter the result, so in-flight work is abandoned.
  std::mutex mu;
  std::map<std::uint64_t, std::vector<Hit>> pending;
  std::vector<std::pair<std::uint64_t, Hit>> accepted;
  std::uint64_t frontier = 0;
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t left = next.fetch_add(1, std::memory_order_relaxed);
      if (left >= layout.size()) return;
      auto hits = scan_left(layout, bounds, left, options.limit, stop);
      std::lock_guard lock(mu);
      if (stop.load()) return;
      pending.emplace(left, std::move(hits));
      for (auto it = pending.find(frontier); it != pending.end(); it = pending.find(frontier)) {
        for (const Hit& h : it->second) {
          if (accepted.size() < options.limit) accepted.emplace_back(it->first, h);
        }
        pending.erase(it);
        ++frontier;
        if (accepted.size() >= options.limit || frontier >= layout.size()) {
          stop.store(true);
          break;
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<ReversalWitness> out;
  out.reserve(accepted.size());
  for (const auto& [left, hit] : accepted) out.push_back(materialize(layout, left, hit));
  return out;
}

}  // namespace ifaudit

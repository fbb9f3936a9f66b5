#ifndef NAKASEQ_ENUMERATE_HPP
#define NAKASEQ_ENUMERATE_HPP

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "nakaseq/algebra.hpp"
#include "nakaseq/bigint.hpp"
#include "nakaseq/excseq.hpp"
#include "nakaseq/modcat.hpp"
#include "nakaseq/module_set.hpp"

namespace nakaseq {

/// The search visited more nodes than the configured budget. This is a
/// resource condition, not a mathematical answer.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : Error("node budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

using Sequence = std::vector<Indec>;

struct EnumOptions {
  Mode mode = Mode::weak;
  bool materialize = false;
  /// Count sequences of exactly this size instead of full ones.
  std::optional<int> fixed_size;
  /// Cap on materialized witnesses (lexicographically first ones kept).
  std::optional<std::size_t> max_witnesses;
  unsigned threads = 1;
  /// Over selfinjective algebras, search only first modules of socle n and
  /// recover the rest through σ. Totals are identical to the plain search.
  bool use_rotation = false;
  std::optional<std::uint64_t> node_budget;
};

struct EnumResult {
  /// Largest size of any sequence (the full size).
  int max_size = 0;
  /// Size the count refers to: max_size, or the requested fixed size.
  int size = 0;
  BigInt count = 0;
  /// Sorted lexicographically by module keys; empty unless materialized.
  std::vector<Sequence> sequences;
  bool truncated = false;
};

/// Precomputed exceptionality and pair compatibility for one algebra/mode.
/// Immutable after construction and safe to share across threads.
class PairTable {
 public:
  PairTable(const NakayamaAlgebra& a, Mode mode)
      : modules_(indecomposables(a)), exceptional_(modules_.size()) {
    const auto n = modules_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (is_exceptional(a, mode, modules_[i])) exceptional_.set(i);
    }
    later_.assign(n, ModuleSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (!exceptional_.test(i)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!exceptional_.test(j)) continue;
        const auto& m = modules_[i];
        const auto& x = modules_[j];
        const bool ok =
            hom_dim(a, x, m) == 0 &&
            (mode == Mode::weak ? ext1_dim(a, x, m) == 0 : all_ext_vanish(a, x, m));
        if (ok) later_[i].set(j);
      }
    }
  }

  std::size_t size() const noexcept { return modules_.size(); }
  const std::vector<Indec>& modules() const noexcept { return modules_; }
  const Indec& module(std::size_t i) const { return modules_[i]; }
  const ModuleSet& exceptional() const noexcept { return exceptional_; }
  /// Modules allowed after module i.
  const ModuleSet& later(std::size_t i) const { return later_[i]; }

 private:
  std::vector<Indec> modules_;
  ModuleSet exceptional_;
  std::vector<ModuleSet> later_;
};

namespace detail {

class NodeCounter {
 public:
  explicit NodeCounter(std::optional<std::uint64_t> budget) : budget_(budget) {}

  void tick() {
    const auto used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_ && used > *budget_) throw BudgetExceeded(*budget_);
  }

 private:
  std::optional<std::uint64_t> budget_;
  std::atomic<std::uint64_t> used_{0};
};

// The admissible continuations after a chosen prefix depend only on the set
//   C = exceptional ∩ later(m_1) ∩ ... ∩ later(m_s),
// so both searches below are memoized on C.
class Searcher {
 public:
  struct Best {
    int extra = 0;
    BigInt count = 0;
  };

  Searcher(const PairTable& table, NodeCounter& nodes)
      : table_(table), nodes_(nodes) {}

  /// Longest extension of a prefix with candidate set c, and how many
  /// ordered extensions reach that length.
  const Best& best(const ModuleSet& c) {
    if (auto it = best_.find(c); it != best_.end()) return it->second;
    nodes_.tick();
    Best b{0, 1};
    if (!c.empty()) {
      b.count = 0;
      c.for_each([&](std::size_t x) {
        const auto& sub = best(c & table_.later(x));
        if (sub.extra + 1 > b.extra) {
          b.extra = sub.extra + 1;
          b.count = sub.count;
        } else if (sub.extra + 1 == b.extra) {
          b.count += sub.count;
        }
      });
    }
    return best_.emplace(c, std::move(b)).first->second;
  }

  /// Number of ordered extensions of exactly `remaining` more modules.
  BigInt ways(const ModuleSet& c, int remaining) {
    if (remaining == 0) return 1;
    if (c.count() < static_cast<std::size_t>(remaining)) return 0;
    auto& slot = ways_[remaining];
    if (auto it = slot.find(c); it != slot.end()) return it->second;
    nodes_.tick();
    BigInt total = 0;
    c.for_each([&](std::size_t x) { total += ways(c & table_.later(x), remaining - 1); });
    ways_[remaining].emplace(c, total);
    return total;
  }

  /// Appends to `out` every extension of `prefix` by `remaining` modules,
  /// in lexicographic order, stopping once `limit` sequences exist.
  void collect(const ModuleSet& c, int remaining, bool full_only,
               std::vector<std::size_t>& prefix, std::vector<Sequence>& out,
               std::size_t limit) {
    if (out.size() >= limit) return;
    if (remaining == 0) {
      Sequence seq;
      seq.reserve(prefix.size());
      for (auto i : prefix) seq.push_back(table_.module(i));
      // Distinctness follows from Hom(M, M) != 0; checked, not enforced.
      assert(distinct(prefix));
      out.push_back(std::move(seq));
      return;
    }
    c.for_each([&](std::size_t x) {
      if (out.size() >= limit) return;
      nodes_.tick();
      const auto next = c & table_.later(x);
      const bool viable = full_only ? best(next).extra == remaining - 1
                                    : ways(next, remaining - 1) > 0;
      if (!viable) return;
      prefix.push_back(x);
      collect(next, remaining - 1, full_only, prefix, out, limit);
      prefix.pop_back();
    });
  }

 private:
  static bool distinct(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  }

  const PairTable& table_;
  NodeCounter& nodes_;
  std::unordered_map<ModuleSet, Best, ModuleSetHash> best_;
  std::map<int, std::unordered_map<ModuleSet, BigInt, ModuleSetHash>> ways_;
};

struct StartResult {
  int max_size = 0;  // longest sequence starting with this module
  BigInt count = 0;  // sequences of the target size starting with it
  std::vector<Sequence> witnesses;
};

}  // namespace detail

/// Exhaustive search for exceptional sequences. Every candidate appended
/// must pair with all earlier modules, not just its predecessor. The search
/// is split by first module; each worker keeps its own memo and results are
/// merged in first-module order, so output does not depend on scheduling.
inline EnumResult enumerate(const NakayamaAlgebra& a, const EnumOptions& opts) {
  const PairTable table(a, opts.mode);
  detail::NodeCounter nodes(opts.node_budget);

  const bool rotate = opts.use_rotation && a.is_selfinjective();
  std::vector<std::size_t> starts;
  table.exceptional().for_each([&](std::size_t i) {
    if (!rotate || socle(a, table.module(i)) == a.vertices()) starts.push_back(i);
  });

  if (opts.fixed_size && *opts.fixed_size < 0) {
    throw Error("sequence size must be non-negative");
  }

  // Pass 1: longest sequence through each start.
  std::vector<detail::StartResult> per_start(starts.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(starts.size())));

  auto run_parallel = [&](auto&& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      detail::Searcher searcher(table, nodes);
      for (;;) {
        const auto slot = next.fetch_add(1);
        if (slot >= starts.size()) return;
        try {
          body(searcher, slot);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(starts.size());
          return;
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
  };

  run_parallel([&](detail::Searcher& s, std::size_t slot) {
    const auto x = starts[slot];
    const auto& b = s.best(table.exceptional() & table.later(x));
    per_start[slot].max_size = b.extra + 1;
    per_start[slot].count = b.count;
  });

  EnumResult result;
  for (const auto& r : per_start) result.max_size = std::max(result.max_size, r.max_size);
  result.size = opts.fixed_size.value_or(result.max_size);
  const bool full = !opts.fixed_size || *opts.fixed_size == result.max_size;

  if (result.size == 0) {
    result.count = 1;  // the empty sequence
    if (opts.materialize) result.sequences.push_back({});
    return result;
  }

  // Pass 2: counts (fixed size only) and witnesses.
  const std::size_t limit =
      opts.materialize
          ? (rotate ? std::numeric_limits<std::size_t>::max()
                    : opts.max_witnesses.value_or(std::numeric_limits<std::size_t>::max()))
          : 0;
  run_parallel([&](detail::Searcher& s, std::size_t slot) {
    auto& r = per_start[slot];
    const auto x = starts[slot];
    const auto rest = table.exceptional() & table.later(x);
    if (full) {
      if (r.max_size != result.size) r.count = 0;
    } else {
      r.count = s.ways(rest, result.size - 1);
    }
    if (limit > 0 && r.count > 0) {
      std::vector<std::size_t> prefix{x};
      s.collect(rest, result.size - 1, full, prefix, r.witnesses, limit);
    }
  });

  for (auto& r : per_start) {
    result.count += r.count;
    for (auto& w : r.witnesses) result.sequences.push_back(std::move(w));
  }

  if (rotate) {
    const int n = a.vertices();
    result.count *= n;
    if (opts.materialize) {
      std::vector<Sequence> all;
      all.reserve(result.sequences.size() * static_cast<std::size_t>(n));
      for (const auto& w : result.sequences) {
        Sequence cur = w;
        for (int j = 0; j < n; ++j) {
          all.push_back(cur);
          for (auto& m : cur) m = sigma(a, m);
        }
      }
      std::sort(all.begin(), all.end());
      result.sequences = std::move(all);
    }
  }

  if (opts.materialize && opts.max_witnesses &&
      result.sequences.size() > *opts.max_witnesses) {
    result.sequences.resize(*opts.max_witnesses);
  }
  result.truncated = opts.materialize && BigInt(result.sequences.size()) != result.count;
  return result;
}

}  // namespace nakaseq

#endif  // NAKASEQ_ENUMERATE_HPP

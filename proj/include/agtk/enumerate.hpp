// Isomorph-free enumeration of AG-groupoids of a given order.
//
// The search tree is partitioned by the first row of the table. Each
// first-row prefix is identified by its value as a base-n number, so a long
// run can be split into prefix ranges and resumed; the per-range totals add
// up to the full count. Prefixes are processed by a pool of workers, each
// with its own search state and accumulator; a prefix's results are merged
// into the caller's accumulator only once the whole prefix is done.

#ifndef AGTK_ENUMERATE_HPP_
#define AGTK_ENUMERATE_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "magma.hpp"
#include "search.hpp"

namespace agtk {

  // Half-open range [first, last) of first-row prefix indices.
  struct PrefixRange {
    std::uint64_t first = 0;
    std::uint64_t last  = UINT64_MAX;
  };

  // Reported once per finished prefix, in completion order.
  struct PrefixDone {
    std::uint64_t index;
    std::string   row;  // the prefix as comma separated 0-based entries
    std::uint64_t count;
    std::uint64_t completed;
    std::uint64_t total;
  };

  struct EnumerationOptions {
    unsigned                                         jobs = 1;
    std::optional<std::chrono::steady_clock::duration> budget;
    std::optional<PrefixRange>                       prefixes;
    std::function<void(PrefixDone const&)>           on_prefix;
  };

  struct EnumerationProgress {
    std::uint64_t              count              = 0;
    std::uint64_t              completed_prefixes = 0;
    std::uint64_t              total_prefixes     = 0;
    std::vector<std::uint64_t> unfinished;  // prefix indices not completed
  };

  // The time budget ran out; the accumulator holds the completed prefixes.
  class budget_exceeded : public std::runtime_error {
   public:
    explicit budget_exceeded(EnumerationProgress progress)
        : std::runtime_error("enumeration budget exceeded after "
                             + std::to_string(progress.completed_prefixes)
                             + " of "
                             + std::to_string(progress.total_prefixes)
                             + " prefixes"),
          _progress(std::move(progress)) {}

    [[nodiscard]] EnumerationProgress const& progress() const noexcept {
      return _progress;
    }

   private:
    EnumerationProgress _progress;
  };

  // Accumulator that only counts.
  struct CountOnly {
    [[nodiscard]] CountOnly fresh() const noexcept {
      return {};
    }
    void add(TableView const&) noexcept {}
    void merge(CountOnly&&) noexcept {}
  };

  struct FirstRowPrefix {
    std::uint64_t             index;
    std::vector<std::uint8_t> cells;
  };

  // The first rows that survive the left invertive and canonicity checks,
  // in increasing index order.
  inline std::vector<FirstRowPrefix> first_row_prefixes(std::size_t n) {
    detail::AgSearch            search(n);
    std::vector<FirstRowPrefix> result;
    search.run(0, n, [&](detail::AgSearch& s) {
      FirstRowPrefix prefix{0, std::vector<std::uint8_t>(s.cells(),
                                                         s.cells() + n)};
      for (auto c : prefix.cells) {
        prefix.index = prefix.index * n + c;
      }
      result.push_back(std::move(prefix));
      return true;
    });
    return result;
  }

  // Number of first-row prefix indices, n^n.
  inline std::uint64_t prefix_space(std::size_t n) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < n; ++i) {
      result *= n;
    }
    return result;
  }

  // Runs the enumeration, calling Acc::add on a worker-local accumulator for
  // every canonical AG-groupoid and merging finished prefixes into total.
  // Returns the number of tables found. Acc must provide fresh() (an empty
  // accumulator configured like this one), add(TableView const&) and
  // merge(Acc&&); calls to fresh and merge on total are serialised.
  template <typename Acc>
  std::uint64_t enumerate_ag_into(std::size_t               n,
                                  Acc&                      total,
                                  EnumerationOptions const& options = {}) {
    if (n == 0 || n > max_search_order) {
      throw std::invalid_argument("order must be in 1.."
                                  + std::to_string(max_search_order));
    }
    using clock = std::chrono::steady_clock;
    std::optional<clock::time_point> deadline;
    if (options.budget) {
      deadline = clock::now() + *options.budget;
    }

    std::vector<FirstRowPrefix> tasks;
    for (auto& prefix : first_row_prefixes(n)) {
      if (!options.prefixes
          || (prefix.index >= options.prefixes->first
              && prefix.index < options.prefixes->last)) {
        tasks.push_back(std::move(prefix));
      }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool>        out_of_time{false};
    std::mutex               mtx;
    std::uint64_t            count     = 0;
    std::uint64_t            completed = 0;
    std::vector<bool>        done(tasks.size(), false);

    auto expired = [&] {
      if (out_of_time.load(std::memory_order_relaxed)) {
        return true;
      }
      if (deadline && clock::now() >= *deadline) {
        out_of_time = true;
        return true;
      }
      return false;
    };

    auto worker = [&] {
      detail::AgSearch search(n);
      while (true) {
        std::size_t const t = next.fetch_add(1);
        if (t >= tasks.size() || expired()) {
          return;
        }
        Acc local = [&] {
          std::lock_guard lock(mtx);
          return total.fresh();
        }();
        std::uint64_t local_count = 0;
        search.seed(tasks[t].cells);
        bool const finished
            = search.run(n, n * n, [&](detail::AgSearch& s) {
                local.add(s.view());
                ++local_count;
                return (local_count & 0x3fff) != 0 || !expired();
              });
        if (!finished) {
          return;
        }
        std::lock_guard lock(mtx);
        total.merge(std::move(local));
        count += local_count;
        ++completed;
        done[t] = true;
        if (options.on_prefix) {
          std::string row;
          for (auto c : tasks[t].cells) {
            row += (row.empty() ? "" : ",") + std::to_string(c);
          }
          options.on_prefix(PrefixDone{tasks[t].index,
                                       row,
                                       local_count,
                                       completed,
                                       tasks.size()});
        }
      }
    };

    unsigned const jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
      }
      for (auto& thread : pool) {
        thread.join();
      }
    }

    if (completed != tasks.size()) {
      EnumerationProgress progress;
      progress.count              = count;
      progress.completed_prefixes = completed;
      progress.total_prefixes     = tasks.size();
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (!done[t]) {
          progress.unfinished.push_back(tasks[t].index);
        }
      }
      throw budget_exceeded(std::move(progress));
    }
    return count;
  }

  namespace detail {
    struct SinkAccumulator {
      std::function<void(Magma const&)> const* sink = nullptr;
      std::vector<Magma>                       buffer;

      [[nodiscard]] SinkAccumulator fresh() const {
        return {};
      }

      void add(TableView const& view) {
        buffer.emplace_back(view);
      }

      void merge(SinkAccumulator&& other) {
        for (auto const& m : other.buffer) {
          (*sink)(m);
        }
      }
    };
  }  // namespace detail

  // Calls sink once per isomorphism class of AG-groupoids of order n, with
  // the class's canonical table. Calls are serialised; with one job they
  // arrive in a deterministic order. Returns the number of classes.
  inline std::uint64_t
  enumerate_ag(std::size_t                              n,
               std::function<void(Magma const&)> const& sink,
               EnumerationOptions const&                options = {}) {
    if (!sink) {
      CountOnly total;
      return enumerate_ag_into(n, total, options);
    }
    detail::SinkAccumulator total;
    total.sink = &sink;
    return enumerate_ag_into(n, total, options);
  }

  inline std::vector<Magma> all_ag_groupoids(std::size_t n, unsigned jobs = 1) {
    std::vector<Magma> result;
    EnumerationOptions options;
    options.jobs = jobs;
    enumerate_ag(
        n, [&result](Magma const& m) { result.push_back(m); }, options);
    return result;
  }

}  // namespace agtk

#endif  // AGTK_ENUMERATE_HPP_

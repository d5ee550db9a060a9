#pragma once

// Thread-safe LRU caches used by recursion and search nodes.

#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "etf/model/func.hpp"

namespace etf::model::detail {

struct ArgsKey {
  std::array<Nat, 3> v;
  bool operator==(const ArgsKey&) const = default;
};

struct ArgsKeyHash {
  std::size_t operator()(const ArgsKey& k) const {
    std::size_t h = 0;
    for (const auto& x : k.v) h = h * 1000003u ^ x.hash();
    return h;
  }
};

// Exact argument -> value cache.
class ValueMemo {
 public:
  explicit ValueMemo(std::size_t cap = kMemoCapacity) : cap_(cap) {}

  std::optional<Nat> get(const ArgsKey& k) {
    if (!memo_enabled()) return std::nullopt;
    std::lock_guard lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second.second);
    return it->second.first;
  }

  void put(const ArgsKey& k, const Nat& v) {
    if (!memo_enabled()) return;
    std::lock_guard lock(mu_);
    if (map_.count(k)) return;
    order_.push_front(k);
    map_.emplace(k, std::make_pair(v, order_.begin()));
    while (map_.size() > cap_) {
      map_.erase(order_.back());
      order_.pop_back();
    }
  }

 private:
  std::size_t cap_;
  std::mutex mu_;
  std::list<ArgsKey> order_;
  std::unordered_map<ArgsKey, std::pair<Nat, std::list<ArgsKey>::iterator>, ArgsKeyHash> map_;
};

// Per-parameter prefix of a recursion: values f(m,0..k). Capacity counts
// stored values across all parameters.
class TrajectoryMemo {
 public:
  explicit TrajectoryMemo(std::size_t cap = kMemoCapacity) : cap_(cap) {}

  struct Lookup {
    std::optional<Nat> hit;
    std::uint64_t start = 0;  // index of `from`
    std::optional<Nat> from;  // last known value, if any
  };

  Lookup lookup(const Nat& m, std::uint64_t n) {
    Lookup out;
    if (!memo_enabled()) return out;
    std::lock_guard lock(mu_);
    auto it = map_.find(m);
    if (it == map_.end()) return out;
    order_.splice(order_.begin(), order_, it->second.pos);
    const auto& vals = it->second.values;
    if (n < vals.size()) {
      out.hit = vals[n];
    } else {
      out.start = vals.size() - 1;
      out.from = vals.back();
    }
    return out;
  }

  // `vals` continues the trajectory at index `start`.
  void extend(const Nat& m, std::uint64_t start, std::vector<Nat>&& vals) {
    if (!memo_enabled() || vals.empty() || vals.size() > cap_) return;
    std::lock_guard lock(mu_);
    auto it = map_.find(m);
    if (it == map_.end()) {
      if (start != 0) return;
      order_.push_front(m);
      it = map_.emplace(m, Entry{{}, order_.begin()}).first;
    }
    auto& cur = it->second.values;
    if (start > cur.size()) return;
    std::size_t skip = cur.size() - start;
    for (std::size_t i = skip; i < vals.size(); ++i) cur.push_back(std::move(vals[i]));
    total_ += vals.size() > skip ? vals.size() - skip : 0;
    while (total_ > cap_ && !order_.empty()) {
      auto victim = map_.find(order_.back());
      total_ -= victim->second.values.size();
      map_.erase(victim);
      order_.pop_back();
    }
  }

 private:
  struct Entry {
    std::vector<Nat> values;
    std::list<Nat>::iterator pos;
  };
  std::size_t cap_;
  std::size_t total_ = 0;
  std::mutex mu_;
  std::list<Nat> order_;
  std::unordered_map<Nat, Entry> map_;
};

}  // namespace etf::model::detail

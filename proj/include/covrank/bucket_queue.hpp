#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace covrank {

// Monotone integer priority queue over node ids 0..n-1: an array of FIFO
// buckets indexed by the current key, with a floor pointer at or below the
// lowest occupied bucket. Supports O(1) insertion and decrement; pop_min
// scans upward from the floor, which stays amortized O(1) per operation
// because keys only ever decrease by 1 and the floor moves down by at most 1
// per decrement.
//
// Buckets are FIFO: the initial fill enqueues ids in the order given, and a
// decremented id re-enqueues at the tail of its new bucket. This pins the
// tie-breaking of every peeling order built on top of the queue.
class MinBucketQueue {
 public:
  // keys[v] is the initial priority of node v; ids are enqueued 0..n-1.
  explicit MinBucketQueue(const std::vector<std::int64_t>& keys) {
    std::int64_t max_key = 0;
    for (std::int64_t k : keys) {
      assert(k >= 0);
      if (k > max_key) max_key = k;
    }
    const std::int32_t n = static_cast<std::int32_t>(keys.size());
    key_.assign(keys.begin(), keys.end());
    prev_.assign(n, kNil);
    next_.assign(n, kNil);
    head_.assign(static_cast<std::size_t>(max_key) + 1, kNil);
    tail_.assign(static_cast<std::size_t>(max_key) + 1, kNil);
    for (std::int32_t v = 0; v < n; ++v) enqueue(v, key_[v]);
    live_count_ = n;
  }

  bool empty() const { return live_count_ == 0; }
  std::int32_t size() const { return live_count_; }
  bool live(std::int32_t v) const { return key_[v] >= 0; }
  std::int64_t key(std::int32_t v) const { return key_[v]; }

  // Removes and returns the head of the lowest non-empty bucket.
  std::int32_t pop_min() {
    assert(live_count_ > 0);
    while (head_[static_cast<std::size_t>(floor_)] == kNil) ++floor_;
    const std::int32_t v = head_[static_cast<std::size_t>(floor_)];
    unlink(v, floor_);
    key_[v] = -1;
    --live_count_;
    return v;
  }

  // Priority of the node pop_min would return next.
  std::int64_t min_key() {
    assert(live_count_ > 0);
    while (head_[static_cast<std::size_t>(floor_)] == kNil) ++floor_;
    return floor_;
  }

  // Moves v from its bucket to the tail of bucket key-1.
  void decrement(std::int32_t v) {
    assert(live(v) && key_[v] > 0);
    unlink(v, key_[v]);
    --key_[v];
    enqueue(v, key_[v]);
    if (key_[v] < floor_) floor_ = key_[v];
  }

 private:
  static constexpr std::int32_t kNil = -1;

  void enqueue(std::int32_t v, std::int64_t k) {
    const auto b = static_cast<std::size_t>(k);
    prev_[v] = tail_[b];
    next_[v] = kNil;
    if (tail_[b] != kNil) {
      next_[tail_[b]] = v;
    } else {
      head_[b] = v;
    }
    tail_[b] = v;
  }

  void unlink(std::int32_t v, std::int64_t k) {
    const auto b = static_cast<std::size_t>(k);
    if (prev_[v] != kNil) {
      next_[prev_[v]] = next_[v];
    } else {
      head_[b] = next_[v];
    }
    if (next_[v] != kNil) {
      prev_[next_[v]] = prev_[v];
    } else {
      tail_[b] = prev_[v];
    }
  }

  std::vector<std::int64_t> key_;  // -1 once popped
  std::vector<std::int32_t> prev_, next_;
  std::vector<std::int32_t> head_, tail_;  // per bucket
  std::int64_t floor_ = 0;
  std::int32_t live_count_ = 0;
};

}  // namespace covrank

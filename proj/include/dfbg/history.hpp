#pragma once

#include <deque>

#include "dfbg/raster.hpp"

namespace dfbg {

// Ring buffer of the last T frames paired with their background posteriors —
// the KDE sample store. Entries are ordered oldest first, newest last.
class ModelHistory {
 public:
  struct Entry {
    Frame frame;
    ProbabilityMap bg_posterior;
  };

  explicit ModelHistory(int capacity);

  // Appends an entry, evicting the oldest once past capacity. All entries
  // must share the video's dimensions.
  void push(Frame frame, ProbabilityMap bg_posterior);

  int capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Entry& entry(std::size_t i) const { return entries_[i]; }  // 0 = oldest
  Entry& newest() { return entries_.back(); }

  int width() const { return width_; }
  int height() const { return height_; }

 private:
  int capacity_;
  int width_ = 0;
  int height_ = 0;
  std::deque<Entry> entries_;
};

}  // namespace dfbg

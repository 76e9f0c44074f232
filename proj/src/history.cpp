#include "dfbg/history.hpp"

namespace dfbg {

ModelHistory::ModelHistory(int capacity) : capacity_(capacity) {
  if (capacity < 1) throw std::invalid_argument("ModelHistory: capacity must be >= 1");
}

void ModelHistory::push(Frame frame, ProbabilityMap bg_posterior) {
  require_same_size(frame, bg_posterior, "ModelHistory::push");
  if (entries_.empty()) {
    width_ = frame.width();
    height_ = frame.height();
  } else if (frame.width() != width_ || frame.height() != height_) {
    throw DataError("ModelHistory::push: frame size changed mid-video");
  }
  entries_.push_back(Entry{std::move(frame), std::move(bg_posterior)});
  while (entries_.size() > static_cast<std::size_t>(capacity_)) entries_.pop_front();
}

}  // namespace dfbg

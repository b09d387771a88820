// Audit trail of the event-lattice steps taken by an algorithm.
#pragma once

#include <string>
#include <vector>

namespace l0 {

class Trace {
 public:
  void add(std::string line) { lines_.push_back(std::move(line)); }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::vector<std::string> lines_;
};

inline void trace_add(Trace* t, std::string line) {
  if (t) t->add(std::move(line));
}

}  // namespace l0

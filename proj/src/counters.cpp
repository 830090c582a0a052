#include "skinnyqr/counters.hpp"

namespace skinnyqr {

TrafficCounters& counters() {
  static TrafficCounters instance;
  return instance;
}

}  // namespace skinnyqr

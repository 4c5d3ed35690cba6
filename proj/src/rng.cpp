#include "relm/rng.hpp"

#include <cmath>
#include <numbers>

namespace relm {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

void Rng::save(serialize::Writer& w) const {
  for (uint64_t s : state_) w.u64(s);
  w.f64(spare_);
  w.u8(has_spare_ ? 1 : 0);
}

void Rng::load(serialize::Reader& r) {
  for (auto& s : state_) s = r.u64();
  spare_ = r.f64();
  has_spare_ = r.u8() != 0;
}

}  // namespace relm

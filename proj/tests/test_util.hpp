#pragma once

#include "klr/cartan.hpp"
#include "klr/element.hpp"

namespace testutil {

inline klr::KLRContext sl2() {
  auto d = klr::CartanDatum::validate({"1"}, {{2}});
  return klr::KLRContext(d, klr::QMatrix::default_q(d));
}

inline klr::KLRContext sl3() {
  auto d = klr::CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
  return klr::KLRContext(d, klr::QMatrix::default_q(d));
}

inline klr::KLRContext b2() {
  auto d = klr::CartanDatum::validate({"1", "2"}, {{2, -1}, {-2, 2}});
  return klr::KLRContext(d, klr::QMatrix::default_q(d));
}

inline klr::KLRContext a1_affine() {
  auto d = klr::CartanDatum::validate({"0", "1"}, {{2, -2}, {-2, 2}});
  return klr::KLRContext(d, klr::QMatrix::default_q(d));
}

} // namespace testutil

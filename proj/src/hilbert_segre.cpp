#include "wallcross/hilbert_segre.hpp"

namespace wallcross {

SymClass<Rational> first_integral_class(const SurfaceData& s,
                                        const IntVector& xi, int d) {
  return first_integral_class(concrete_context(s, xi), d);
}

SymClass<Rational> correction_class(const SurfaceData& s, const IntVector& xi,
                                    int d) {
  return correction_class(concrete_context(s, xi), d);
}

SymClass<Rational> R_class(const SurfaceData& s, const IntVector& xi, int d) {
  return R_class(concrete_context(s, xi), d);
}

SymClass<Rational> derive_U(const SurfaceData& s, const IntVector& xi, int d) {
  return derive_U(concrete_context(s, xi), d);
}

std::int64_t ext_rank(const SurfaceData& s, const IntVector& xi,
                      std::int64_t n, std::int64_t m, ExtSide side) {
  if (n < 0 || m < 0)
    throw Error(ErrorKind::RangeError, "Hilbert scheme lengths must be >= 0");
  const IntVector x = side == ExtSide::Minus ? IntVector(xi) : IntVector(-xi);
  const std::int64_t twice = s.pair(x, IntVector(x - s.K()));
  return -twice / 2 + n + m - 1;
}

}  // namespace wallcross

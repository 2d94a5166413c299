#include "fg2/config.hpp"
#include "fg2/rational.hpp"

namespace fg2 {

template struct TriangleConfig<Rational>;
template struct QuadConfig<Rational>;

} // namespace fg2

#include "fg2/matmodel.hpp"
#include "fg2/rational.hpp"

namespace fg2 {

// Explicit instantiation over the base field keeps the template honest.
template struct MatrixModel<Rational>;

} // namespace fg2

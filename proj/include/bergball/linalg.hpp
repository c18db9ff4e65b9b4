#ifndef BERGBALL_LINALG_HPP
#define BERGBALL_LINALG_HPP

#include <vector>

#include "bergball/scalar.hpp"

namespace bergball {

/** Rank of a dense matrix over Q(i), by exact Gaussian elimination. */
int exact_rank(std::vector<std::vector<GaussianRational>> m);

} // namespace bergball

#endif

#pragma once

#include "diskmcg/mapping_class.hpp"

namespace diskmcg {

// Exponential growth estimator: the ratio
//     len(f^iters(seed)) / len(f^(iters-1)(seed))
// of cyclically reduced class lengths. For a pseudo-Anosov f the ratios
// converge to the stretch factor.
//
// Lengths are exact. Small words are iterated explicitly; once the word
// would become large, iteration switches to an exact linear recurrence on
// the counts of length-2 and length-3 cyclic subwords, valid as long as
// every occurring junction keeps a long enough uncancelled core (checked
// each step; a violation raises GrowthError). Big-integer arithmetic keeps
// the astronomically long late words exact.
//
// Throws GrowthError if the seed class is annihilated or the recurrence
// loses validity; ParameterError for iters < 2.
double growth_rate(const MappingClass& f, const Curve& seed, int iters);

}  // namespace diskmcg

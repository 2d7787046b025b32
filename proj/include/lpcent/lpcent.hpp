// Umbrella header.

#ifndef LPCENT_LPCENT_HPP
#define LPCENT_LPCENT_HPP

#include "lpcent/graph.hpp"
#include "lpcent/random.hpp"
#include "lpcent/generators.hpp"
#include "lpcent/spectral.hpp"
#include "lpcent/walks.hpp"
#include "lpcent/electrical.hpp"
#include "lpcent/forests.hpp"
#include "lpcent/centrality.hpp"
#include "lpcent/experiments.hpp"
#include "lpcent/report.hpp"
#include "lpcent/verify.hpp"

#endif  // LPCENT_LPCENT_HPP

#ifndef SKEWRING_SKEWRING_HPP
#define SKEWRING_SKEWRING_HPP

#include "skewring/algebra.hpp"
#include "skewring/config.hpp"
#include "skewring/dstructure.hpp"
#include "skewring/error.hpp"
#include "skewring/inverse.hpp"
#include "skewring/linalg.hpp"
#include "skewring/maps.hpp"
#include "skewring/matrix.hpp"
#include "skewring/poly.hpp"
#include "skewring/random.hpp"
#include "skewring/rational.hpp"
#include "skewring/report.hpp"
#include "skewring/ring.hpp"
#include "skewring/series.hpp"
#include "skewring/structure.hpp"
#include "skewring/suites.hpp"
#include "skewring/text.hpp"

#endif

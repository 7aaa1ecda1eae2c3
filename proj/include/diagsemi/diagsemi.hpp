#ifndef DIAGSEMI_DIAGSEMI_HPP_
#define DIAGSEMI_DIAGSEMI_HPP_

#include "bipartition.hpp"
#include "catalog.hpp"
#include "census.hpp"
#include "config.hpp"
#include "embed.hpp"
#include "enumerate.hpp"
#include "family.hpp"
#include "formulas.hpp"
#include "green.hpp"
#include "io.hpp"
#include "map_element.hpp"
#include "monoid.hpp"
#include "pbr.hpp"
#include "point_permutation.hpp"
#include "table.hpp"

#endif  // DIAGSEMI_DIAGSEMI_HPP_

#ifndef IDPOLY_IDPOLY_HPP
#define IDPOLY_IDPOLY_HPP

#include "enumeration.hpp"
#include "families.hpp"
#include "family_graphs.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "json_io.hpp"
#include "operators.hpp"
#include "polynomial.hpp"
#include "roots.hpp"
#include "shape.hpp"
#include "verify.hpp"
#include "vertex_set.hpp"

#endif  // IDPOLY_IDPOLY_HPP

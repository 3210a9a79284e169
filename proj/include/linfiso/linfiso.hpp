#ifndef LINFISO_LINFISO_HPP
#define LINFISO_LINFISO_HPP

#include "linfiso/boundary_formula.hpp"
#include "linfiso/compression.hpp"
#include "linfiso/error.hpp"
#include "linfiso/lattice.hpp"
#include "linfiso/oracle.hpp"
#include "linfiso/ordering.hpp"
#include "linfiso/point_set.hpp"
#include "linfiso/point_set_io.hpp"
#include "linfiso/report_io.hpp"
#include "linfiso/svg.hpp"
#include "linfiso/types.hpp"

#endif

#pragma once

#include "rackgraph/error.hpp"
#include "rackgraph/exactla/echelon.hpp"
#include "rackgraph/exactla/matrix.hpp"
#include "rackgraph/exactla/scalar.hpp"
#include "rackgraph/exactla/smith.hpp"
#include "rackgraph/exactla/subspace.hpp"
#include "rackgraph/racks/group.hpp"
#include "rackgraph/racks/presentation.hpp"
#include "rackgraph/racks/rack.hpp"
#include "rackgraph/graphlike/graph.hpp"
#include "rackgraph/graphlike/multiplicative.hpp"
#include "rackgraph/cubical/complex.hpp"
#include "rackgraph/cubical/cubes.hpp"
#include "rackgraph/cubical/homology.hpp"
#include "rackgraph/lmhopf/bialgebra.hpp"
#include "rackgraph/lmhopf/coinvariant.hpp"
#include "rackgraph/lmhopf/filtration.hpp"
#include "rackgraph/lmhopf/graded.hpp"
#include "rackgraph/lmhopf/truncation.hpp"
#include "rackgraph/lmlie/algebra.hpp"
#include "rackgraph/lmlie/efunctor.hpp"
#include "rackgraph/liegraph/expm.hpp"
#include "rackgraph/liegraph/lierack.hpp"
#include "rackgraph/io/schema.hpp"

#pragma once

#include "gcomp/bigint.hpp"
#include "gcomp/closed_forms.hpp"
#include "gcomp/composer.hpp"
#include "gcomp/families.hpp"
#include "gcomp/graph.hpp"
#include "gcomp/graph_io.hpp"
#include "gcomp/harness.hpp"
#include "gcomp/naive_oracle.hpp"
#include "gcomp/random_graphs.hpp"
#include "gcomp/vertex_set.hpp"

#pragma once

#include "nht/core.hpp"
#include "nht/errors.hpp"
#include "nht/modular.hpp"
#include "nht/published_specs.hpp"
#include "nht/scramble.hpp"
#include "nht/shapes.hpp"
#include "nht/solver.hpp"
#include "nht/spec_io.hpp"
#include "nht/tables.hpp"

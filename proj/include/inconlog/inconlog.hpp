#pragma once

// Umbrella header for the library (the CLI lives in inconlog/cli.hpp).

#include "inconlog/af.hpp"
#include "inconlog/arguments.hpp"
#include "inconlog/bridges.hpp"
#include "inconlog/consequence.hpp"
#include "inconlog/error.hpp"
#include "inconlog/extensions.hpp"
#include "inconlog/formula.hpp"
#include "inconlog/limits.hpp"
#include "inconlog/models.hpp"
#include "inconlog/premise_set.hpp"
#include "inconlog/theory.hpp"
#include "inconlog/theory_io.hpp"

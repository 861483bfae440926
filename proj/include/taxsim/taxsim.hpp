#pragma once

// Umbrella header for the taxsim semantic-similarity library.

#include "taxsim/batch.hpp"
#include "taxsim/error.hpp"
#include "taxsim/ic.hpp"
#include "taxsim/measures.hpp"
#include "taxsim/path.hpp"
#include "taxsim/taxonomy.hpp"

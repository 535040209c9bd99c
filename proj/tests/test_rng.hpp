#pragma once

// Test-local alias of the library's deterministic stream so tests can draw
// reproducible random inputs without touching <random>.
#include "approxconv/checks.hpp"

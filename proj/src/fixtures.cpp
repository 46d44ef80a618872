// Compiles fixtures.hpp on its own to keep it self-contained.
#include "globk/fixtures.hpp"

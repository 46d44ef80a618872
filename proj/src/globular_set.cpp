// Compiles globular_set.hpp on its own to keep it self-contained.
#include "globk/globular_set.hpp"

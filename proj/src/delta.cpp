// Compiles delta.hpp on its own to keep it self-contained.
#include "globk/delta.hpp"

// Compiles parallel.hpp on its own to keep it self-contained.
#include "globk/parallel.hpp"

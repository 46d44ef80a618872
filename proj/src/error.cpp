// Compiles error.hpp on its own to keep it self-contained.
#include "globk/error.hpp"

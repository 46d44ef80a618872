// Compiles omega.hpp on its own to keep it self-contained.
#include "globk/omega.hpp"

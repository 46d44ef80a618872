// Compiles decalage.hpp on its own to keep it self-contained.
#include "globk/decalage.hpp"

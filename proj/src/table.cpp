// Compiles table.hpp on its own to keep it self-contained.
#include "globk/table.hpp"

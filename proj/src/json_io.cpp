// Compiles json_io.hpp on its own to keep it self-contained.
#include "globk/json_io.hpp"

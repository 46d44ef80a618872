// Compiles report.hpp on its own to keep it self-contained.
#include "globk/report.hpp"

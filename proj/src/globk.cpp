// Compiles globk.hpp on its own to keep it self-contained.
#include "globk/globk.hpp"

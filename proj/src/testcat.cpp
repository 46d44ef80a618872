// Compiles testcat.hpp on its own to keep it self-contained.
#include "globk/testcat.hpp"

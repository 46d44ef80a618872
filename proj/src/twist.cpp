// Compiles twist.hpp on its own to keep it self-contained.
#include "globk/twist.hpp"

// Compiles axioms.hpp on its own to keep it self-contained.
#include "globk/axioms.hpp"

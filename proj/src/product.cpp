// Compiles product.hpp on its own to keep it self-contained.
#include "globk/product.hpp"

#pragma once

#include "globk/axioms.hpp"
#include "globk/decalage.hpp"
#include "globk/delta.hpp"
#include "globk/error.hpp"
#include "globk/fixtures.hpp"
#include "globk/globular_set.hpp"
#include "globk/json_io.hpp"
#include "globk/omega.hpp"
#include "globk/parallel.hpp"
#include "globk/product.hpp"
#include "globk/report.hpp"
#include "globk/table.hpp"
#include "globk/testcat.hpp"
#include "globk/twist.hpp"

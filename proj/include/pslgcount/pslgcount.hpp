#pragma once

#include "pslgcount/rational.hpp"
#include "pslgcount/geom.hpp"
#include "pslgcount/pslg.hpp"
#include "pslgcount/io.hpp"
#include "pslgcount/oracle.hpp"
#include "pslgcount/counting.hpp"
#include "pslgcount/analytics.hpp"
#include "pslgcount/constructions.hpp"
#include "pslgcount/transform.hpp"
#include "pslgcount/random_instances.hpp"

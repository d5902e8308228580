#pragma once

// Umbrella header: the whole engine.

#include "corpus.hpp"
#include "descriptor.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "groups.hpp"
#include "job.hpp"
#include "linalg.hpp"
#include "monoid.hpp"
#include "numpoly.hpp"
#include "oracle.hpp"
#include "parser.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "slice.hpp"
#include "term.hpp"

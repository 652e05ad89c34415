#pragma once

#include "pqgf/genfun.hpp"
#include "pqgf/json_io.hpp"
#include "pqgf/monomial.hpp"
#include "pqgf/mpoly.hpp"
#include "pqgf/report.hpp"
#include "pqgf/sequences.hpp"
#include "pqgf/series.hpp"
#include "pqgf/symfun.hpp"
#include "pqgf/var.hpp"
#include "pqgf/verify.hpp"

#pragma once

#include "ak/errors.hpp"
#include "ak/scalar.hpp"
#include "ak/matrix.hpp"
#include "ak/linalg.hpp"
#include "ak/lie.hpp"
#include "ak/symp.hpp"
#include "ak/nijenhuis.hpp"
#include "ak/connections.hpp"
#include "ak/constructions.hpp"
#include "ak/nspace.hpp"
#include "ak/twistor.hpp"
#include "ak/io.hpp"
#include "ak/report.hpp"
#include "ak/goldens.hpp"

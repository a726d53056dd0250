#pragma once

#include "bohr/errors.hpp"
#include "bohr/series.hpp"
#include "bohr/psi_catalog.hpp"
#include "bohr/extremal.hpp"
#include "bohr/radius.hpp"
#include "bohr/oracle.hpp"
#include "bohr/report.hpp"

#pragma once

#include "montesinos/fraction.hpp"
#include "montesinos/farey.hpp"
#include "montesinos/linear_solve.hpp"
#include "montesinos/edgepath.hpp"
#include "montesinos/system.hpp"
#include "montesinos/surface.hpp"
#include "montesinos/oracle.hpp"
#include "montesinos/crosscheck.hpp"
#include "montesinos/family.hpp"
#include "montesinos/report_io.hpp"

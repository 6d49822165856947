#pragma once

#include <siegel/arith.hpp>
#include <siegel/bound.hpp>
#include <siegel/cusp_count.hpp>
#include <siegel/form_minima.hpp>
#include <siegel/integer.hpp>
#include <siegel/json_io.hpp>
#include <siegel/matrix.hpp>
#include <siegel/polarization.hpp>
#include <siegel/radical.hpp>
#include <siegel/sturm.hpp>
#include <siegel/tables.hpp>
#include <siegel/tits_lattice.hpp>
#include <siegel/unimodular.hpp>

#ifndef BINROUTE_BINROUTE_HPP
#define BINROUTE_BINROUTE_HPP

#include "binroute/bench.hpp"
#include "binroute/brute_force.hpp"
#include "binroute/chromosome.hpp"
#include "binroute/common.hpp"
#include "binroute/ga.hpp"
#include "binroute/instance.hpp"
#include "binroute/io.hpp"
#include "binroute/lp.hpp"
#include "binroute/operators.hpp"
#include "binroute/rng.hpp"
#include "binroute/schedule.hpp"
#include "binroute/stats.hpp"
#include "binroute/svg.hpp"

#endif

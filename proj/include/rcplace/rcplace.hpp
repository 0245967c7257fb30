#ifndef RCPLACE_RCPLACE_HPP
#define RCPLACE_RCPLACE_HPP

#include "baselines.hpp"
#include "core_model.hpp"
#include "free_space.hpp"
#include "geometry.hpp"
#include "instance_io.hpp"
#include "routing_placer.hpp"
#include "segment_tree.hpp"
#include "sim_bench.hpp"

#endif  // RCPLACE_RCPLACE_HPP

#ifndef PSILAB_PSILAB_HPP
#define PSILAB_PSILAB_HPP

#include "psilab/core.hpp"
#include "psilab/enumerate.hpp"
#include "psilab/fixtures.hpp"
#include "psilab/graph.hpp"
#include "psilab/graph6.hpp"
#include "psilab/json_report.hpp"
#include "psilab/matching.hpp"
#include "psilab/set_system.hpp"
#include "psilab/stability.hpp"
#include "psilab/theorems.hpp"
#include "psilab/vertex_set.hpp"

#endif  // PSILAB_PSILAB_HPP

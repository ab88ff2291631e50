#ifndef FLATSR_FLATSR_HPP
#define FLATSR_FLATSR_HPP

#include "flatsr/construct.hpp"
#include "flatsr/core.hpp"
#include "flatsr/enumerate.hpp"
#include "flatsr/graph.hpp"
#include "flatsr/iso.hpp"
#include "flatsr/profile.hpp"
#include "flatsr/semiring.hpp"
#include "flatsr/specfile.hpp"
#include "flatsr/subpower.hpp"
#include "flatsr/suites.hpp"
#include "flatsr/term.hpp"
#include "flatsr/variety.hpp"

#endif

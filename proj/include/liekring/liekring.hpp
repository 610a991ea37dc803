#pragma once

#include "liekring/errors.hpp"
#include "liekring/rational.hpp"
#include "liekring/weight.hpp"
#include "liekring/character.hpp"
#include "liekring/root_system.hpp"
#include "liekring/freudenthal.hpp"
#include "liekring/decompose.hpp"
#include "liekring/verdict.hpp"
#include "liekring/spin10.hpp"
#include "liekring/rep_poly.hpp"
#include "liekring/branching.hpp"
#include "liekring/int_poly.hpp"
#include "liekring/smith.hpp"
#include "liekring/koszul.hpp"
#include "liekring/kring.hpp"
#include "liekring/tangent.hpp"
#include "liekring/report.hpp"
#include "liekring/suites.hpp"

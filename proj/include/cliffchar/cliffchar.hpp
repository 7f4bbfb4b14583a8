#ifndef CLIFFCHAR_CLIFFCHAR_HPP
#define CLIFFCHAR_CLIFFCHAR_HPP

#include "rational.hpp"
#include "cyclotomic.hpp"
#include "word.hpp"
#include "phase_matrix.hpp"
#include "group_table.hpp"
#include "classes.hpp"
#include "modp.hpp"
#include "character_table.hpp"
#include "dixon.hpp"
#include "presentation.hpp"
#include "repdecomp.hpp"
#include "paperdata.hpp"

#endif  // CLIFFCHAR_CLIFFCHAR_HPP

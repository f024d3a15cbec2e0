/**
 * Umbrella header.
 */

#ifndef EMH_EMH_HPP
#define EMH_EMH_HPP

#include "emh/asao_izumihara.hpp"
#include "emh/experiments.hpp"
#include "emh/extended_int.hpp"
#include "emh/graph.hpp"
#include "emh/homology.hpp"
#include "emh/injective_words.hpp"
#include "emh/integer_matrix.hpp"
#include "emh/json_io.hpp"
#include "emh/shellability.hpp"
#include "emh/smith.hpp"
#include "emh/trails.hpp"
#include "emh/tuple_complex.hpp"

#endif

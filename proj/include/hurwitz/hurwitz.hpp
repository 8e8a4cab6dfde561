#pragma once

#include "hurwitz/error.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/alphabet.hpp"
#include "hurwitz/word_table.hpp"
#include "hurwitz/factorization.hpp"
#include "hurwitz/class_metrics.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/constructions.hpp"
#include "hurwitz/reports.hpp"

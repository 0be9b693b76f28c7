#ifndef TRINOM_TRINOM_HPP
#define TRINOM_TRINOM_HPP

#include "trinom/integer.hpp"
#include "trinom/lucas.hpp"
#include "trinom/poly.hpp"
#include "trinom/series.hpp"
#include "trinom/trinomial.hpp"

#endif  // TRINOM_TRINOM_HPP

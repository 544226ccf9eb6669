#ifndef LEONARD_EXPR_HPP
#define LEONARD_EXPR_HPP

#include <string>

#include "leonard/qfield.hpp"

namespace leonard {

/**
 * Parses a scalar expression over the tokens { q, +, -, *, /, ^, ( ) } with
 * integer and p/q rational literals into an exact field element, e.g.
 * "q^2 + q^-2", "-(3/2)*q/(q-1)". Throws Error on malformed input.
 */
RationalFunction parse_scalar(const std::string& text);

}  // namespace leonard

#endif

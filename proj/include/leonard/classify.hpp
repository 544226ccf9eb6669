#ifndef LEONARD_CLASSIFY_HPP
#define LEONARD_CLASSIFY_HPP

#include <optional>
#include <set>
#include <string>

#include "leonard/qfield.hpp"

namespace leonard {

enum class LeonardType {
    QRacah,
    QHahn,
    DualQHahn,
    QuantumQKrawtchouk,
    QKrawtchouk,
    AffineQKrawtchouk,
    DualQKrawtchouk,
};

/// Kebab-case name used on the wire ("q-racah", "dual-q-hahn", ...).
std::string to_string(LeonardType t);
std::optional<LeonardType> leonard_type_from_string(const std::string& s);

/// Matches the zero pattern of (a, a', b, b', xi) against the type table;
/// nullopt (Unclassified) for patterns outside it.
std::optional<LeonardType> classify_type(const RationalFunction& a,
                                         const RationalFunction& a_prime,
                                         const RationalFunction& b,
                                         const RationalFunction& b_prime,
                                         const RationalFunction& xi);

/// The types admitting LB-TD form.
const std::set<LeonardType>& lbtd_types();

}  // namespace leonard

#endif

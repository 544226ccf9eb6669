#include "leonard/classify.hpp"

namespace leonard {

std::string to_string(LeonardType t) {
    switch (t) {
    case LeonardType::QRacah: return "q-racah";
    case LeonardType::QHahn: return "q-hahn";
    case LeonardType::DualQHahn: return "dual-q-hahn";
    case LeonardType::QuantumQKrawtchouk: return "quantum-q-krawtchouk";
    case LeonardType::QKrawtchouk: return "q-krawtchouk";
    case LeonardType::AffineQKrawtchouk: return "affine-q-krawtchouk";
    case LeonardType::DualQKrawtchouk: return "dual-q-krawtchouk";
    }
    return "";
}

std::optional<LeonardType> leonard_type_from_string(const std::string& s) {
    for (LeonardType t : {LeonardType::QRacah, LeonardType::QHahn, LeonardType::DualQHahn,
                          LeonardType::QuantumQKrawtchouk, LeonardType::QKrawtchouk,
                          LeonardType::AffineQKrawtchouk, LeonardType::DualQKrawtchouk})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

std::optional<LeonardType> classify_type(const RationalFunction& a,
                                         const RationalFunction& a_prime,
                                         const RationalFunction& b,
                                         const RationalFunction& b_prime,
                                         const RationalFunction& xi) {
    const bool za = a.is_zero(), zap = a_prime.is_zero();
    const bool zb = b.is_zero(), zbp = b_prime.is_zero();
    const bool zxi = xi.is_zero();

    if (!za && !zap && !zb && !zbp) return LeonardType::QRacah;  // any xi
    if ((za != zap) && !zb && !zbp && !zxi) return LeonardType::QHahn;
    if (!za && !zap && (zb != zbp) && !zxi) return LeonardType::DualQHahn;
    if (!zxi && ((!za && zap && zb && !zbp) || (za && !zap && !zb && zbp)))
        return LeonardType::QuantumQKrawtchouk;
    if ((za != zap) && !zb && !zbp && zxi) return LeonardType::QKrawtchouk;
    if (!zxi && ((za && !zap && zb && !zbp) || (!za && zap && !zb && zbp)))
        return LeonardType::AffineQKrawtchouk;
    if (!za && !zap && (zb != zbp) && zxi) return LeonardType::DualQKrawtchouk;
    return std::nullopt;
}

const std::set<LeonardType>& lbtd_types() {
    static const std::set<LeonardType> types{LeonardType::QRacah, LeonardType::QHahn,
                                             LeonardType::DualQHahn};
    return types;
}

}  // namespace leonard

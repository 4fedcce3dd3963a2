#pragma once

#include <string_view>

namespace pcf {

enum class Regime {
    Series,
    UPos,
    UNegMid,
    UNegNear1,
    UNegRight,
    UNegLeft,
    WNeg,
    WPosRight,
    WPosTurn,
    WPosMid,
};

constexpr std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::Series: return "SERIES";
        case Regime::UPos: return "U_POS";
        case Regime::UNegMid: return "U_NEG_MID";
        case Regime::UNegNear1: return "U_NEG_NEAR1";
        case Regime::UNegRight: return "U_NEG_RIGHT";
        case Regime::UNegLeft: return "U_NEG_LEFT";
        case Regime::WNeg: return "W_NEG";
        case Regime::WPosRight: return "W_POS_RIGHT";
        case Regime::WPosTurn: return "W_POS_TURN";
        case Regime::WPosMid: return "W_POS_MID";
    }
    return "UNKNOWN";
}

}  // namespace pcf

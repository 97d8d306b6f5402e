#pragma once

#include "kgtab/kripke.hpp"

namespace kgtab::testing {

// w sees w1 and w2 with weight 2/3; p is 0, 1/5 and 1/4 respectively.
inline Model two_successor_model() {
    Model m({"w", "w1", "w2"});
    m.set_rel(true, 0, 1, Rational(2, 3));
    m.set_rel(true, 0, 2, Rational(2, 3));
    m.set_val(1, "p", 0, 0);
    m.set_val(1, "p", 1, Rational(1, 5));
    m.set_val(1, "p", 2, Rational(1, 4));
    return m;
}

inline FModel small_snapped_model() {
    FModel m(Model({"w", "u"}));
    m.base.set_rel(true, 0, 1, Rational(1, 5));
    m.base.set_val(1, "p", 1, Rational(2, 5));
    m.add_t(1, 0, Rational(1, 6));
    m.add_t(1, 0, Rational(1, 4));
    return m;
}

inline FModel three_world_snapped_model() {
    FModel m(Model({"w", "x", "u"}));
    m.base.set_rel(true, 0, 1, Rational(1, 4));
    m.base.set_rel(true, 0, 2, Rational(13, 14));
    m.base.set_val(1, "p", 1, Rational(8, 9));
    m.base.set_val(1, "p", 2, Rational(11, 12));
    for (Rational t : {Rational(1, 11), Rational(1, 9), Rational(9, 10), Rational(12, 13)}) m.add_t(1, 0, t);
    return m;
}

// Two worlds, every R+ entry equal to `weight`; optionally one edge raised.
inline Model uniform_frame(Rational weight) {
    Model m({"a", "b"});
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) m.set_rel(true, x, y, weight);
    return m;
}

}  // namespace kgtab::testing

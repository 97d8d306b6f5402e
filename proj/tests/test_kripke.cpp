#include "doctest.h"
#include "kgtab/errors.hpp"
#include "kgtab/kripke.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace kgtab;
using kgtab::testing::small_snapped_model;
using kgtab::testing::three_world_snapped_model;
using kgtab::testing::two_successor_model;

namespace {

Rational pos(const Model& m, const char* text, const char* w = "w", Logic l = Logic::KGINV) {
    return eval_standard(m, parse(text), w, l).pos;
}

Rational fpos(const FModel& m, const char* text, const char* w = "w", Logic l = Logic::KGINV) {
    return eval_fmodel(m, parse(text), w, l).pos;
}

// Piecewise-linear order automorphism of [0,1] commuting with 1 - x.
Rational polyline(Rational x) {
    static const Rational xs[] = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
    static const Rational ys[] = {0, Rational(1, 8), Rational(1, 2), Rational(7, 8), 1};
    for (int i = 0; i < 4; ++i)
        if (x <= xs[i + 1]) return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i]);
    return 1;
}

}  // namespace

TEST_CASE("box and diamond are not interdefinable: fixture model") {
    Model m = two_successor_model();
    CHECK(pos(m, "box p") == Rational(1, 5));
    CHECK(pos(m, "dia p") == Rational(1, 4));
    CHECK_FALSE(is_crisp(m));
}

TEST_CASE("constants") {
    Model m = two_successor_model();
    CHECK(eval_standard(m, parse("1"), "w", Logic::KGBL) == ValuePair{1, 0});
    CHECK(eval_standard(m, parse("B"), "w", Logic::KGBL) == ValuePair{1, 1});
    CHECK(eval_standard(m, parse("N"), "w", Logic::KGBL) == ValuePair{0, 0});
    CHECK(eval_standard(m, parse("1"), "w", Logic::KGINV) == ValuePair{1, 0});
}

TEST_CASE("bi-lattice Delta-top") {
    Model m({"w"});
    Formula dtop = parse("delta p & neg snot delta p");
    m.set_val(1, "p", 0, 1);
    m.set_val(2, "p", 0, 0);
    CHECK(eval_standard(m, dtop, "w", Logic::KGBL) == ValuePair{1, 0});
    m.set_val(2, "p", 0, Rational(1, 3));
    CHECK(eval_standard(m, dtop, "w", Logic::KGBL) == ValuePair{0, 1});
}

TEST_CASE("F-model fixtures") {
    CHECK(fpos(small_snapped_model(), "box p") == 1);
    CHECK(fpos(small_snapped_model(), "inv dia inv p") == Rational(3, 4));
    CHECK(fpos(three_world_snapped_model(), "box p") == Rational(9, 10));
    CHECK(fpos(three_world_snapped_model(), "inv dia inv p") == Rational(8, 9));
}

TEST_CASE("F-model with trivial T sets rounds to 0/1") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        Model m = testing::random_model(rng, 3, 6, {"p"});
        FModel fm(m);
        for (const auto& w : m.worlds()) {
            Rational raw = pos(m, "box p", w.c_str());
            CHECK(fpos(fm, "box p", w.c_str()) == (raw == 1 ? 1 : 0));
            Rational rawd = pos(m, "dia p", w.c_str());
            CHECK(fpos(fm, "dia p", w.c_str()) == (rawd == 0 ? 0 : 1));
        }
    }
}

TEST_CASE("evaluation agrees with the desugared formula") {
    std::mt19937 rng(5);
    for (Logic logic : {Logic::KGINV, Logic::KGINV2, Logic::KGBL}) {
        for (int i = 0; i < 300; ++i) {
            Formula g = testing::random_formula(rng, logic, 10, 2, 2);
            Formula d = desugar(g, logic);
            Model m = testing::random_model(rng, 3, 6, {"p", "q"});
            CAPTURE(print(g));
            CHECK(eval_standard_all(m, g, logic) == eval_standard_all(m, d, logic));
            FModel fm = testing::random_fmodel(rng, 3, 6, {"p", "q"});
            CHECK(eval_fmodel_all(fm, g, logic) == eval_fmodel_all(fm, d, logic));
        }
    }
}

TEST_CASE("involution and crisp interdefinability") {
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        Model m = testing::random_model(rng, 4, 8, {"p", "q"});
        Formula g = testing::random_formula(rng, Logic::KGBL, 8, 2, 2);
        CHECK(eval_standard_all(m, f::inv(f::inv(g)), Logic::KGBL) == eval_standard_all(m, g, Logic::KGBL));
        for (std::size_t a = 0; a < m.num_worlds(); ++a)
            for (std::size_t b = 0; b < m.num_worlds(); ++b)
                m.set_rel(true, a, b, m.rel(true, a, b) > Rational(1, 2) ? 1 : 0);
        REQUIRE(is_crisp(m) == (m.num_worlds() > 0 && [&] {
                    for (std::size_t a = 0; a < m.num_worlds(); ++a)
                        for (std::size_t b = 0; b < m.num_worlds(); ++b) {
                            Rational r = m.rel(false, a, b);
                            if (r != 0 && r != 1) return false;
                        }
                    return true;
                }()));
        auto box = eval_standard_all(m, parse("box p"), Logic::KGINV);
        auto dual = eval_standard_all(m, parse("inv dia inv p"), Logic::KGINV);
        for (std::size_t w = 0; w < m.num_worlds(); ++w) CHECK(box[w].pos == dual[w].pos);
    }
}

TEST_CASE("generated submodels preserve values") {
    std::mt19937 rng(13);
    Model t1 = two_successor_model();
    CHECK(generated_submodel(t1, {"w", "w1", "w2"}) == t1);
    CHECK(generated_submodel(t1, {"w1"}).num_worlds() == 1);
    CHECK(generated_submodel(three_world_snapped_model(), {"w"}) == three_world_snapped_model());
    CHECK_THROWS_AS(generated_submodel(t1, {"nowhere"}), UnknownWorld);
    for (int i = 0; i < 200; ++i) {
        FModel fm = testing::random_fmodel(rng, 4, 6, {"p", "q"});
        std::string root = fm.base.worlds().back();
        FModel sub = generated_submodel(fm, {root});
        Formula g = testing::random_formula(rng, Logic::KGBL, 8, 3, 2);
        auto full = eval_fmodel_all(fm, g, Logic::KGBL);
        auto part = eval_fmodel_all(sub, g, Logic::KGBL);
        for (std::size_t k = 0; k < sub.base.num_worlds(); ++k)
            CHECK(part[k] == full[fm.base.index_of(sub.base.worlds()[k])]);
    }
}

TEST_CASE("order isomorphisms commuting with 1-x transfer all values") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        FModel fm = testing::random_fmodel(rng, 3, 8, {"p", "q"});
        FModel gm = fm;
        Model& b = gm.base;
        for (std::size_t x = 0; x < b.num_worlds(); ++x) {
            for (std::size_t y = 0; y < b.num_worlds(); ++y)
                for (bool plus : {true, false}) b.set_rel(plus, x, y, polyline(b.rel(plus, x, y)));
            for (int idx : {1, 2}) {
                for (const auto& v : {"p", "q"}) b.set_val(idx, v, x, polyline(b.val(idx, v, x)));
                std::set<Rational> mapped;
                for (auto t : fm.t_set(idx, x)) mapped.insert(polyline(t));
                (idx == 1 ? gm.T1 : gm.T2)[x] = mapped;
            }
        }
        Formula g = testing::random_formula(rng, Logic::KGBL, 10, 2, 2);
        auto before = eval_fmodel_all(fm, g, Logic::KGBL);
        auto after = eval_fmodel_all(gm, g, Logic::KGBL);
        auto sb = eval_standard_all(fm.base, g, Logic::KGBL);
        auto sa = eval_standard_all(gm.base, g, Logic::KGBL);
        for (std::size_t w = 0; w < before.size(); ++w) {
            CHECK(after[w].pos == polyline(before[w].pos));
            CHECK(after[w].negv == polyline(before[w].negv));
            CHECK(sa[w].pos == polyline(sb[w].pos));
        }
    }
}

TEST_CASE("likelihood above one half") {
    Formula wal = parse("inv delta(box d -> inv box d)");
    for (Rational x : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 5), Rational(1)}) {
        Model m({"w", "u"});
        m.set_rel(true, 0, 1, 1);
        m.set_val(1, "d", 1, x);
        REQUIRE(pos(m, "box d") == x);
        CHECK((eval_standard(m, wal, "w", Logic::KGINV).pos == 1) == (x > Rational(1, 2)));
    }
}

TEST_CASE("frame definability of unreliable and reliable sources") {
    Formula unreliable = parse("inv delta(inv dia 1 -> dia 1)");
    Formula reliable = parse("inv delta(dia 1 -> inv dia 1)");
    Model m = testing::uniform_frame(Rational(2, 5));
    for (auto v : eval_standard_all(m, unreliable, Logic::KGINV)) CHECK(v.pos == 1);
    for (auto v : eval_standard_all(m, reliable, Logic::KGINV)) CHECK(v.pos == 0);
    m.set_rel(true, 0, 1, Rational(3, 5));
    CHECK(pos(m, "inv delta(inv dia 1 -> dia 1)", "a") == 0);
    CHECK(pos(m, "inv delta(inv dia 1 -> dia 1)", "b") == 1);
    CHECK(pos(m, "inv delta(dia 1 -> inv dia 1)", "a") == 1);
    CHECK(pos(m, "inv delta(dia 1 -> inv dia 1)", "b") == 0);
}

TEST_CASE("modal F-model values land in the T sets") {
    std::mt19937 rng(19);
    for (int i = 0; i < 200; ++i) {
        FModel fm = testing::random_fmodel(rng, 3, 6, {"p", "q"});
        Formula inner = testing::random_formula(rng, Logic::KGBL, 6, 1, 2);
        for (Op op : {Op::Box, Op::Dia, Op::IBox, Op::IDia}) {
            auto vals = eval_fmodel_all(fm, f::un(op, inner), Logic::KGBL);
            for (std::size_t w = 0; w < vals.size(); ++w) {
                CHECK(fm.T1[w].count(vals[w].pos) == 1);
                CHECK(fm.T2[w].count(vals[w].negv) == 1);
            }
        }
        Formula g2 = testing::random_formula(rng, Logic::KGINV2, 6, 1, 2);
        auto v2 = eval_fmodel_all(fm, f::un(Op::Box2, g2), Logic::KGINV2);
        for (std::size_t w = 0; w < v2.size(); ++w) CHECK(fm.T2[w].count(v2[w].pos) == 1);
    }
}

TEST_CASE("unknown worlds and illegal connectives") {
    Model m = two_successor_model();
    CHECK_THROWS_AS(eval_standard(m, parse("p"), "nowhere", Logic::KGINV), UnknownWorld);
    CHECK_THROWS_AS(eval_standard(m, parse("neg p"), "w", Logic::KGINV), IllegalConnective);
}

TEST_CASE("crispness") {
    Model m({"a", "b"});
    m.set_rel(true, 0, 1, 1);
    m.set_rel(false, 1, 1, 1);
    CHECK(is_crisp(m));
}

TEST_CASE("model files round trip") {
    FModel fm = three_world_snapped_model();
    fm.base.set_rel(false, 1, 2, Rational(3, 7));
    fm.base.set_val(2, "q", 2, Rational(5, 11));
    bool has_t = false;
    FModel back = load_model(save_model(fm), &has_t);
    CHECK(has_t);
    CHECK(back == fm);
    Model m = two_successor_model();
    CHECK(load_model(save_model(m), &has_t).base == m);
    CHECK_FALSE(has_t);
}

TEST_CASE("model file errors carry a location") {
    auto where = [](const std::string& text) {
        try {
            load_model(text);
        } catch (const FormatError& e) {
            return e.location;
        }
        return std::string("no error");
    };
    CHECK(where("{") != "no error");
    CHECK(where(R"({"worlds": []})") == "worlds");
    CHECK(where(R"({"worlds": ["w"], "rel_plus": [["w", "u", "1"]]})") == "rel_plus[0][1]");
    CHECK(where(R"({"worlds": ["w"], "v1": [["p", "w", "3/2"]]})") == "v1[0][2]");
    CHECK(where(R"({"worlds": ["w"], "v1": [["p", "w", "x"]]})") == "v1[0][2]");
    CHECK(where(R"({"worlds": ["w"], "T1": {"w": ["1/2", "2"]}})") == "T1.w[1]");
}

#include "json.hpp"

#include "kgtab/errors.hpp"
#include "kgtab/kripke.hpp"

namespace kgtab {

using nlohmann::json;

namespace {

Rational read_degree(const json& j, const std::string& where) {
    if (!j.is_string() && !j.is_number_integer())
        throw FormatError(where, "expected a rational string \"p/q\"");
    Rational r;
    try {
        r = j.is_string() ? parse_rational(j.get<std::string>()) : Rational(j.get<std::int64_t>());
    } catch (const std::exception& e) {
        throw FormatError(where, e.what());
    }
    if (!in_unit_interval(r)) throw FormatError(where, "value " + to_string(r) + " outside [0,1]");
    return r;
}

std::string read_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw FormatError(where, "expected a string");
    return j.get<std::string>();
}

std::size_t read_world(const Model& m, const json& j, const std::string& where) {
    std::string w = read_string(j, where);
    if (!m.has_world(w)) throw FormatError(where, "unknown world '" + w + "'");
    return m.index_of(w);
}

const json* field(const json& doc, const char* key) {
    auto it = doc.find(key);
    return it == doc.end() ? nullptr : &*it;
}

json degrees(const std::set<Rational>& s) {
    json arr = json::array();
    for (auto& r : s) arr.push_back(to_string(r));
    return arr;
}

}  // namespace

FModel load_model(const std::string& bytes, bool* has_t_sets) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw FormatError("byte " + std::to_string(e.byte), "malformed JSON");
    }
    if (!doc.is_object()) throw FormatError("", "model file must be a JSON object");
    const json* worlds = field(doc, "worlds");
    if (!worlds || !worlds->is_array() || worlds->empty())
        throw FormatError("worlds", "expected a non-empty list of world names");
    Model m;
    for (std::size_t i = 0; i < worlds->size(); ++i) {
        std::string w = read_string((*worlds)[i], "worlds[" + std::to_string(i) + "]");
        if (m.has_world(w)) throw FormatError("worlds[" + std::to_string(i) + "]", "duplicate world '" + w + "'");
        m.add_world(w);
    }
    for (auto [key, plus] : {std::pair{"rel_plus", true}, std::pair{"rel_minus", false}}) {
        const json* rel = field(doc, key);
        if (!rel) continue;
        if (!rel->is_array()) throw FormatError(key, "expected a list of [from, to, weight]");
        for (std::size_t i = 0; i < rel->size(); ++i) {
            std::string at = std::string(key) + "[" + std::to_string(i) + "]";
            const json& e = (*rel)[i];
            if (!e.is_array() || e.size() != 3) throw FormatError(at, "expected [from, to, weight]");
            m.set_rel(plus, read_world(m, e[0], at + "[0]"), read_world(m, e[1], at + "[1]"),
                      read_degree(e[2], at + "[2]"));
        }
    }
    for (auto [key, idx] : {std::pair{"v1", 1}, std::pair{"v2", 2}}) {
        const json* val = field(doc, key);
        if (!val) continue;
        if (!val->is_array()) throw FormatError(key, "expected a list of [variable, world, value]");
        for (std::size_t i = 0; i < val->size(); ++i) {
            std::string at = std::string(key) + "[" + std::to_string(i) + "]";
            const json& e = (*val)[i];
            if (!e.is_array() || e.size() != 3) throw FormatError(at, "expected [variable, world, value]");
            m.set_val(idx, read_string(e[0], at + "[0]"), read_world(m, e[1], at + "[1]"),
                      read_degree(e[2], at + "[2]"));
        }
    }
    FModel fm(std::move(m));
    bool any_t = false;
    for (auto [key, idx] : {std::pair{"T1", 1}, std::pair{"T2", 2}}) {
        const json* t = field(doc, key);
        if (!t) continue;
        any_t = true;
        if (!t->is_object()) throw FormatError(key, "expected a map from world to list of values");
        for (auto it = t->begin(); it != t->end(); ++it) {
            std::string at = std::string(key) + "." + it.key();
            if (!fm.base.has_world(it.key())) throw FormatError(at, "unknown world '" + it.key() + "'");
            if (!it->is_array()) throw FormatError(at, "expected a list of values");
            std::size_t w = fm.base.index_of(it.key());
            for (std::size_t i = 0; i < it->size(); ++i)
                fm.add_t(idx, w, read_degree((*it)[i], at + "[" + std::to_string(i) + "]"));
        }
    }
    if (has_t_sets) *has_t_sets = any_t;
    return fm;
}

namespace {

json model_json(const Model& m) {
    json doc;
    doc["worlds"] = m.worlds();
    for (auto [key, plus] : {std::pair{"rel_plus", true}, std::pair{"rel_minus", false}}) {
        json arr = json::array();
        for (std::size_t a = 0; a < m.num_worlds(); ++a)
            for (std::size_t b = 0; b < m.num_worlds(); ++b)
                if (Rational r = m.rel(plus, a, b); r != 0)
                    arr.push_back({m.worlds()[a], m.worlds()[b], to_string(r)});
        doc[key] = arr;
    }
    for (auto [key, idx] : {std::pair{"v1", 1}, std::pair{"v2", 2}}) {
        json arr = json::array();
        for (auto& [var, vals] : m.valuation(idx))
            for (std::size_t w = 0; w < vals.size(); ++w)
                arr.push_back({var, m.worlds()[w], to_string(vals[w])});
        doc[key] = arr;
    }
    return doc;
}

}  // namespace

std::string save_model(const Model& m) { return model_json(m).dump(2); }

std::string save_model(const FModel& fm) {
    json doc = model_json(fm.base);
    for (auto [key, idx] : {std::pair{"T1", 1}, std::pair{"T2", 2}}) {
        json t = json::object();
        for (std::size_t w = 0; w < fm.base.num_worlds(); ++w) t[fm.base.worlds()[w]] = degrees(fm.t_set(idx, w));
        doc[key] = t;
    }
    return doc.dump(2);
}

}  // namespace kgtab

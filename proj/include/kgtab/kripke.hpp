#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kgtab/formula.hpp"
#include "kgtab/rational.hpp"

namespace kgtab {

struct ValuePair {
    Rational pos;
    Rational negv;
    friend bool operator==(const ValuePair&, const ValuePair&) = default;
};

// Finite bi-relational model. Relations are dense matrices indexed by world
// position; a missing valuation entry reads as 0.
class Model {
public:
    Model() = default;
    explicit Model(std::vector<std::string> worlds);

    std::size_t add_world(const std::string& name);
    std::size_t num_worlds() const { return worlds_.size(); }
    const std::vector<std::string>& worlds() const { return worlds_; }
    std::size_t index_of(const std::string& world) const;  // throws UnknownWorld
    bool has_world(const std::string& world) const { return index_.count(world) != 0; }

    Rational rel(bool plus, std::size_t from, std::size_t to) const;
    void set_rel(bool plus, std::size_t from, std::size_t to, Rational value);
    Rational val(int index, const std::string& var, std::size_t world) const;
    void set_val(int index, const std::string& var, std::size_t world, Rational value);

    // Variables with an explicit entry in v1 or v2.
    std::set<std::string> variables() const;
    const std::map<std::string, std::vector<Rational>>& valuation(int index) const {
        return index == 1 ? v1_ : v2_;
    }

    friend bool operator==(const Model&, const Model&) = default;

private:
    std::vector<std::string> worlds_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<Rational>> plus_, minus_;
    std::map<std::string, std::vector<Rational>> v1_, v2_;
};

struct FModel {
    Model base;
    std::vector<std::set<Rational>> T1, T2;  // per world, always containing 0 and 1

    FModel() = default;
    explicit FModel(Model m);
    void add_t(int index, std::size_t world, Rational value);
    const std::set<Rational>& t_set(int index, std::size_t world) const { return index == 1 ? T1[world] : T2[world]; }
    friend bool operator==(const FModel&, const FModel&) = default;
};

ValuePair eval_standard(const Model& m, Formula f, const std::string& world, Logic logic);
ValuePair eval_fmodel(const FModel& m, Formula f, const std::string& world, Logic logic);
std::vector<ValuePair> eval_standard_all(const Model& m, Formula f, Logic logic);
std::vector<ValuePair> eval_fmodel_all(const FModel& m, Formula f, Logic logic);

Model generated_submodel(const Model& m, const std::set<std::string>& roots);
FModel generated_submodel(const FModel& m, const std::set<std::string>& roots);

bool is_crisp(const Model& m);

// JSON model files. load_model fills T sets from optional "T1"/"T2" fields;
// has_t_sets reports whether either was present.
FModel load_model(const std::string& bytes, bool* has_t_sets = nullptr);
std::string save_model(const Model& m);
std::string save_model(const FModel& m);

// How a modality is computed for a given coordinate: box-like (infimum of
// R -> phi, snapped down) or diamond-like (supremum of R & phi, snapped up),
// over R+ or R-, reading phi at `child_index` and snapping into T_{t_index}.
struct ModalSemantics {
    bool box_like;
    bool plus;
    int child_index;
    int t_index;
};

// `index` is the coordinate being computed (1 = positive support, 2 = negative).
ModalSemantics modal_semantics(Op op, int index, Logic logic);

}  // namespace kgtab

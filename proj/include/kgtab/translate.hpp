#pragma once

#include <map>
#include <string>

#include "kgtab/formula.hpp"

namespace kgtab {

// Injective renaming p -> p_star used for the negative-support copy of each
// variable. Names colliding with variables of the source formula get extra
// underscores until fresh.
class StarMap {
public:
    StarMap() = default;
    explicit StarMap(Formula source);

    const std::string& star(const std::string& var) const;
    const std::map<std::string, std::string>& entries() const { return map_; }

private:
    std::map<std::string, std::string> map_;
};

Formula oplus(Formula f, const StarMap& stars);
Formula ominus(Formula f, const StarMap& stars);
inline Formula oplus(Formula f) { return oplus(f, StarMap(f)); }
inline Formula ominus(Formula f) { return ominus(f, StarMap(f)); }

Formula join(Formula f);
Formula embed_inv_to_bl(Formula f);
Formula embed_bl_to_inv(Formula f);

}  // namespace kgtab

#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qch {

/* Global ordered table of named indeterminates.
 *
 * The monomial order of every polynomial in the process is graded
 * lexicographic over this list, so the declaration order is part of the
 * canonical form. The standard names are registered up front in a fixed
 * order; further names (mu1, c2, ...) may be declared before use, e.g.
 * while reading a config or a JSON file. Lookups are read-mostly and
 * cheap; declaration is serialized.
 */
class Vars {
public:
    static Vars& instance();

    // Returns the id of `name`, declaring it if new. Valid identifiers:
    // [A-Za-z_][A-Za-z0-9_]*.
    unsigned declare(const std::string& name);

    std::optional<unsigned> find(const std::string& name) const;
    const std::string& name(unsigned id) const;
    unsigned count() const;

    unsigned q() const { return q_; } // id of "q", always 0

private:
    Vars();
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, unsigned> ids_;
    unsigned q_ = 0;
};

bool is_valid_identifier(const std::string& name);

} // namespace qch

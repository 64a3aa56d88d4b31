#include "qch/vars.hpp"

#include <cctype>

#include "qch/error.hpp"

namespace qch {

bool is_valid_identifier(const std::string& name)
{
    if (name.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

Vars& Vars::instance()
{
    static Vars v;
    return v;
}

Vars::Vars()
{
    // Fixed startup order; "q" must be first.
    for (const char* s : {"q", "hbar", "h", "nu", "x", "y"}) {
        ids_.emplace(s, static_cast<unsigned>(names_.size()));
        names_.emplace_back(s);
    }
}

unsigned Vars::declare(const std::string& name)
{
    if (!is_valid_identifier(name))
        throw DomainError("invalid indeterminate name '" + name + "'");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end())
        return it->second;
    unsigned id = static_cast<unsigned>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
}

std::optional<unsigned> Vars::find(const std::string& name) const
{
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

const std::string& Vars::name(unsigned id) const
{
    std::lock_guard<std::mutex> lock(mu_);
    if (id >= names_.size())
        throw DomainError("unknown indeterminate id");
    return names_[id];
}

unsigned Vars::count() const
{
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<unsigned>(names_.size());
}

} // namespace qch

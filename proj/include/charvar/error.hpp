#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace charvar {

/// Rejection carrying a stable machine-readable name ("NotCoprime",
/// "NotApplicable", ...). The CLI maps these to exit code 1 and echoes
/// the name in diagnostics; everything else is a usage or internal error.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace charvar

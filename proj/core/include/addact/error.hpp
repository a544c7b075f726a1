#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace addact {

// All library failures are reported as Error with a stable machine-readable
// kind ("NotAssociative", "DimensionMismatch", ...) plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Validation collects every violated axiom before failing, so callers can
// print the full diagnostic list (one witness per violation).
class ValidationError : public Error {
public:
    ValidationError(std::string kind, std::vector<std::string> violations)
        : Error(std::move(kind), join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += "; ";
            out += v[i];
        }
        return out;
    }
    std::vector<std::string> violations_;
};

}  // namespace addact

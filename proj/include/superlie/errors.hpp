#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace superlie {

// A mathematically meaningful rejection of the input (exit code 2 at the CLI).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message, nlohmann::json detail = nlohmann::json::object())
        : std::runtime_error(code + ": " + message), code_(std::move(code)), detail_(std::move(detail))
    {
    }
    const std::string& code() const { return code_; }
    const nlohmann::json& detail() const { return detail_; }

private:
    std::string code_;
    nlohmann::json detail_;
};

}  // namespace superlie

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hitkit {

// All library errors carry a module prefix, e.g. "formula-core: literal out of range".
class Error : public std::runtime_error {
public:
    Error(std::string_view module, std::string_view message)
        : std::runtime_error(std::string(module) + ": " + std::string(message)),
          module_(module) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

class ParseError : public Error {
public:
    ParseError(std::string_view module, std::size_t line, std::string_view message)
        : Error(module, "line " + std::to_string(line) + ": " + std::string(message)),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace hitkit

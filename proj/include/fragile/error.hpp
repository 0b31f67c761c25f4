#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fragile {

enum class Errc {
    self_loop,
    out_of_range,
    parse_error,
    partial_colouring,
    too_small,
    precondition_violated,
    not_m_fragile,
    condition_invalid,
    internal_invariant,
    budget_exceeded,
    not_cubic,
    not_an_edge,
    unknown_name,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Parse failures carry a 1-based line and a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset)
        : Error(Errc::parse_error,
                what + " (line " + std::to_string(line) + ", byte " + std::to_string(offset) + ")"),
          line_(line), offset_(offset) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

}  // namespace fragile

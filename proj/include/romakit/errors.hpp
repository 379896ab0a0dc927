#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace romakit {

// Malformed data file; carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Missing or unusable configuration: absent data files, bad directories.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Domain errors on well-formed input: empty corpora, invalid byte sequences,
// text outside a scheme's image.
class data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace romakit

#pragma once

#include <stdexcept>
#include <string>

namespace fpplab {

// Error taxonomy shared by all modules. Everything derives from
// std::runtime_error so callers that don't care can catch one type.

struct invalid_parameter_error : std::runtime_error {
    explicit invalid_parameter_error(const std::string& what) : std::runtime_error(what) {}
};

struct degenerate_input_error : std::runtime_error {
    explicit degenerate_input_error(const std::string& what) : std::runtime_error(what) {}
};

struct out_of_window_error : std::runtime_error {
    explicit out_of_window_error(const std::string& what) : std::runtime_error(what) {}
};

struct empty_domain_error : std::runtime_error {
    explicit empty_domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct invalid_vertex_error : std::runtime_error {
    explicit invalid_vertex_error(const std::string& what) : std::runtime_error(what) {}
};

// Signals that an operation's hypothesis does not hold for the given sample
// (distinct from a caller bug: the caller may probe and recover).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fpplab

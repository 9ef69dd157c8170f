#ifndef COCRIT_ERRORS_HPP
#define COCRIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cocrit {

// Malformed textual input (graph6, edge lists, coloring JSON).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")")
        , offset_(byte_offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Request is outside the range this implementation supports.
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A complete answer could not be produced within the configured budget.
// Never coerced to a boolean verdict.
class indeterminate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cocrit

#endif

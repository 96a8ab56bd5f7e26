#ifndef GRAPHBOUNDS_ERRORS_HPP
#define GRAPHBOUNDS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphbounds
{
    /// Malformed textual input. Carries the byte offset (graph6) or line
    /// number (edge lists) where parsing stopped.
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & what, std::size_t position) :
                std::runtime_error(what + " (at " + std::to_string(position) + ")"),
                _position(position)
            {
            }

            auto position() const -> std::size_t { return _position; }

        private:
            std::size_t _position;
    };

    /// A precondition on the arguments of a bound or oracle does not hold
    /// (graph outside the class, t out of range, bad bipartition, ...).
    class DomainError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A proven inequality failed during computation. Always a bug.
    class InvariantViolation : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    /// An explicit size or work limit refused the request.
    class ResourceLimit : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif

#ifndef METALLIC_ERRORS_HPP
#define METALLIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace metallic {

// Root of every error the library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

class dimension_mismatch : public error {
public:
    using error::error;
};

class unknown_variable : public error {
public:
    explicit unknown_variable(const std::string &name) : error("unknown variable '" + name + "'") {}
};

class degree_overflow : public error {
public:
    degree_overflow(int degree, int cap)
        : error("polynomial degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap))
    {
    }
};

class parse_error : public error {
public:
    parse_error(const std::string &what, int line = 0, int column = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                         : what),
          line_(line), column_(column)
    {
    }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class validation_error : public error {
public:
    using error::error;
};

// Declared bundle frame disagrees with the computed bundle.
class declared_frame_mismatch : public validation_error {
public:
    using validation_error::validation_error;
};

// Radical rank differs between sample points.
class rank_jump : public validation_error {
public:
    using validation_error::validation_error;
};

class degenerate_configuration : public validation_error {
public:
    using validation_error::validation_error;
};

// Two independent computations of the same quantity disagree.
class assertion_failure : public error {
public:
    using error::error;
};

} // namespace metallic

#endif

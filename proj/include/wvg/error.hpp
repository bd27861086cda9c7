#ifndef WVG_ERROR_HPP
#define WVG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wvg {

/// Base class of every error raised by the engine.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text/JSON, bad numerals, or a game violating 0 < q <= sum(w).
class invalid_game : public error {
public:
    using error::error;
};

/// An operation was called on a game outside its domain.
class precondition_error : public error {
public:
    using error::error;
};

/// No backend can compute the requested quantity within the configured limits.
class no_backend : public error {
public:
    no_backend(const std::string& what, std::string hint)
        : error(what), hint_(std::move(hint)) {}

    const std::string& hint() const noexcept { return hint_; }

private:
    std::string hint_;
};

/// Two backends disagreed on the same game. Always an implementation bug.
class crosscheck_mismatch : public error {
public:
    using error::error;
};

} // namespace wvg

#endif // WVG_ERROR_HPP

#ifndef PUNCTURED_TYPES_HPP
#define PUNCTURED_TYPES_HPP

#include <cmath>
#include <compare>
#include <complex>
#include <string>

#include "errors.hpp"

namespace punctured
{

using ComplexValue = std::complex<double>;

// Number n >= 2 of punctures; the punctured plane is C minus the n-th roots
// of unity.
class PunctureIndex
{
public:
    explicit PunctureIndex(int n) : n_(n)
    {
        if (n < 2) {
            throw DomainError("puncture index must be >= 2, got " + std::to_string(n));
        }
    }

    int value() const noexcept { return n_; }
    double as_double() const noexcept { return static_cast<double>(n_); }

    friend bool operator==(PunctureIndex, PunctureIndex) = default;
    friend auto operator<=>(PunctureIndex, PunctureIndex) = default;

private:
    int n_;
};

inline void require_finite(ComplexValue z, const char *what)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

} // namespace punctured

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace nlcs {

// Two objects that must share a Fock-space dimension do not.
class dimension_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A requested truncation cannot hold the state to the required tail
// tolerance. Carries the tail mass that was actually achieved.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double achieved_tail)
        : std::runtime_error(what), achieved_tail_(achieved_tail) {}

    double achieved_tail() const noexcept { return achieved_tail_; }

private:
    double achieved_tail_;
};

// Normalizing a zero vector: the state was annihilated by the construction
// that produced it.
class degenerate_state : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An infinite series failed to converge within its term cap.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nlcs

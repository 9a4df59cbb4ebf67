/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every crackchannel module.
 */
#ifndef CRACKCHANNEL_ERRORS_HPP
#define CRACKCHANNEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crackchannel {

/// Invalid user configuration (bad field, violated invariant).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a formula (a <= 0, s <= 0, d <= 0 ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation at a singular point of the unperturbed field (tip or load point).
class SingularityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A per-defect failure, tagged with the position of the defect in the input list.
class DefectEvaluationError : public DomainError {
public:
    DefectEvaluationError(std::size_t index, const std::string& what)
        : DomainError("defect " + std::to_string(index) + ": " + what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Propagation aborted because a defect came too close to the moving tip.
class PropagationError : public DomainError {
public:
    PropagationError(std::size_t step, const std::string& what)
        : DomainError("step " + std::to_string(step) + ": " + what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace crackchannel

#endif  // CRACKCHANNEL_ERRORS_HPP

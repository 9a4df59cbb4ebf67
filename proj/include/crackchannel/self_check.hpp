/**
 * @file self_check.hpp
 * @brief Built-in identity and invariant checks run by `crackchannel check`.
 */
#ifndef CRACKCHANNEL_SELF_CHECK_HPP
#define CRACKCHANNEL_SELF_CHECK_HPP

#include <string>
#include <vector>

namespace crackchannel {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> run_self_checks();

}  // namespace crackchannel

#endif  // CRACKCHANNEL_SELF_CHECK_HPP

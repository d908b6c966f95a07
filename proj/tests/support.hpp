#ifndef CRN_TESTS_SUPPORT_HPP
#define CRN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>

#include "crn/network.hpp"

namespace crn::test {

std::string data_path(const std::string& name);
Network load(const std::string& name);

/// Random valid 0,1-network in `.crn` text: 1 to `max_species` species,
/// 1 to `max_reactions` reactions, no production reactions, no duplicates.
std::string random_network_text(std::uint64_t seed, unsigned max_species = 5, unsigned max_reactions = 6);
Network random_network(std::uint64_t seed, unsigned max_species = 5, unsigned max_reactions = 6);

}  // namespace crn::test

#endif

#include "support.hpp"

#include <random>
#include <set>

namespace crn::test {

std::string data_path(const std::string& name) { return std::string(CRN_TEST_DATA) + "/" + name; }

Network load(const std::string& name) { return parse_network_file(data_path(name)); }

namespace {

std::string side(unsigned mask, unsigned nspecies) {
  if (mask == 0) return "0";
  std::string out;
  for (unsigned s = 0; s < nspecies; ++s) {
    if (!(mask & (1u << s))) continue;
    if (!out.empty()) out += " + ";
    out += static_cast<char>('A' + s);
  }
  return out;
}

}  // namespace

std::string random_network_text(std::uint64_t seed, unsigned max_species, unsigned max_reactions) {
  std::mt19937_64 rng(seed);
  const unsigned ns = std::uniform_int_distribution<unsigned>(1, max_species)(rng);
  const unsigned nr = std::uniform_int_distribution<unsigned>(1, max_reactions)(rng);
  const unsigned full = (1u << ns) - 1;
  std::uniform_int_distribution<unsigned> reactant(1, full), product(0, full);
  std::set<std::pair<unsigned, unsigned>> seen;
  std::string text;
  unsigned made = 0;
  for (unsigned attempt = 0; made < nr && attempt < 200; ++attempt) {
    unsigned y = reactant(rng), y2 = product(rng);
    if (y == y2 || !seen.insert({y, y2}).second) continue;
    ++made;
    text += side(y, ns) + " -> " + side(y2, ns) + ", k" + std::to_string(made) + "\n";
  }
  return text;
}

Network random_network(std::uint64_t seed, unsigned max_species, unsigned max_reactions) {
  return parse_network(random_network_text(seed, max_species, max_reactions));
}

}  // namespace crn::test

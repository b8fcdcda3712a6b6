#ifndef RECON_TYPES_HPP
#define RECON_TYPES_HPP

#include <cstdint>
#include <vector>

namespace recon {

using Bits = std::vector<std::uint8_t>; // entries 0/1
using LlrVector = std::vector<double>;  // positive = bit 0 / symbol +1 more likely

} // namespace recon

#endif

// plan.hpp -- a joint transmission plan for one slot.
//
// bs_code is the packet set XORed by the base station (empty = silent);
// d2d maps each transmitting user to the packet set it XORs. Packet lists
// are kept sorted so plans compare and print deterministically.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace idnc {

// Pseudo transmitter index for the base station in recovery records.
inline constexpr int kBaseStation = -1;

struct TransmissionPlan {
    std::vector<int> bs_code;             // sorted packet indices
    std::map<int, std::vector<int>> d2d;  // transmitter -> sorted packet indices

    bool empty() const { return bs_code.empty() && d2d.empty(); }

    bool operator==(const TransmissionPlan& o) const { return bs_code == o.bs_code && d2d == o.d2d; }
};

// "p2+p4" style rendering (1-based), used by traces and error messages.
std::string format_code(const std::vector<int>& packets);
std::string format_plan(const TransmissionPlan& plan);

}  // namespace idnc

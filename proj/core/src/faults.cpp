#include "latcoh/faults.hpp"

#include <array>
#include <atomic>
#include <utility>

namespace latcoh {

namespace {

std::atomic<Fault> g_fault{Fault::none};

constexpr std::array<std::pair<Fault, std::string_view>, 7> kNames{{
    {Fault::none, "none"},
    {Fault::cube_weight_off_by_one, "cube-weight-off-by-one"},
    {Fault::c_case3_off_by_one, "c-case3-off-by-one"},
    {Fault::c_drop_case4, "c-drop-case4"},
    {Fault::c_case2_as_case1, "c-case2-as-case1"},
    {Fault::b_parity, "b-parity"},
    {Fault::coface_wrong_shift, "coface-wrong-shift"},
}};

}  // namespace

std::string_view fault_name(Fault f) {
  for (auto [fault, name] : kNames)
    if (fault == f) return name;
  return "unknown";
}

std::optional<Fault> parse_fault(std::string_view name) {
  for (auto [fault, n] : kNames)
    if (n == name) return fault;
  return std::nullopt;
}

const std::vector<Fault>& all_faults() {
  static const std::vector<Fault> faults{Fault::cube_weight_off_by_one, Fault::c_case3_off_by_one,
                                         Fault::c_drop_case4,           Fault::c_case2_as_case1,
                                         Fault::b_parity,               Fault::coface_wrong_shift};
  return faults;
}

Fault active_fault() { return g_fault.load(std::memory_order_relaxed); }

ScopedFault::ScopedFault(Fault f) : previous_(g_fault.exchange(f)) {}
ScopedFault::~ScopedFault() { g_fault.store(previous_); }

}  // namespace latcoh

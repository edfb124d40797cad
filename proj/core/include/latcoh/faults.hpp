#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace latcoh {

/// Single-line faults that the mutation harness can switch on at run time.
/// Production code paths consult `fault_active` at exactly one place each.
enum class Fault {
  none,
  cube_weight_off_by_one,  // cube weight +1 on 2-dimensional cubes
  c_case3_off_by_one,      // third closed-form case of the A-exponent +1
  c_drop_case4,            // fourth case replaced by the first
  c_case2_as_case1,        // second case replaced by the first
  b_parity,                // B only keeps every other t in a fibre
  coface_wrong_shift,      // shifted coface taken at K + 2E_w instead of K - 2E_w
};

std::string_view fault_name(Fault f);
std::optional<Fault> parse_fault(std::string_view name);
const std::vector<Fault>& all_faults();

Fault active_fault();
inline bool fault_active(Fault f) { return active_fault() == f; }

/// Installs a fault for the lifetime of the object. Not reentrant.
class ScopedFault {
 public:
  explicit ScopedFault(Fault f);
  ~ScopedFault();
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  Fault previous_;
};

}  // namespace latcoh

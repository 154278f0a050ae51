#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mwt {

// Critical sweep angles at which the combinatorial structure of the optimal
// tour changes.
enum class EventType { Validity, Domination, Jumping, Passing, Bending, Cuddle };

std::string_view to_string(EventType type);

// Raised when a fixed-direction solve is requested exactly at an event angle.
class EventAngleError : public std::runtime_error {
 public:
  EventAngleError(EventType type, std::vector<int> witnesses, double theta_deg,
                  const std::string& what);

  EventType type() const { return type_; }
  const std::vector<int>& witnesses() const { return witnesses_; }
  double theta_deg() const { return theta_deg_; }

 private:
  EventType type_;
  std::vector<int> witnesses_;
  double theta_deg_;
};

}  // namespace mwt

#include "slm/core.hpp"

namespace slm {

Message make_message(Angle psi) {
  return Message{std::cos(psi.rad()), std::sin(psi.rad())};
}

}  // namespace slm

#include "dbar/kernels.hpp"

namespace dbar::kernels {

Exec& default_exec() {
    static Exec mode = Exec::Parallel;
    return mode;
}

}  // namespace dbar::kernels

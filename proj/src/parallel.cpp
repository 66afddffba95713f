#include "pythag/parallel.hpp"

namespace pythag::par {

Mode default_mode() {
#ifdef _OPENMP
    return Mode::openmp;
#else
    return Mode::serial;
#endif
}

}  // namespace pythag::par

#include "vat/parallel.hpp"

#include <cstdlib>
#include <string>

namespace vat {

std::size_t configured_worker_count() {
    if (const char* env = std::getenv("VAT_WORKERS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<std::size_t>(n);
        } catch (...) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace vat

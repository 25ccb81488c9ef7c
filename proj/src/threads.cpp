#include "theta/threads.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace theta {

unsigned worker_threads() {
    unsigned cap = 0;
    if (const char* env = std::getenv("THETA_THREADS")) {
        try {
            cap = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            cap = 0;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (cap == 0) cap = hw > 8 ? 8 : hw;
    return cap;
}

}  // namespace theta

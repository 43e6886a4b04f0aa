#include "circa/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace circa {

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CIRCA_THREADS")) {
        unsigned cap = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, cap);
        if (ec == std::errc{} && ptr == end && cap > 0) n = std::min(n, cap);
    }
    return n;
}

}  // namespace circa
